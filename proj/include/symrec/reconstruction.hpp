// Copyright 2026 The symrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "symrec/opspace.hpp"
#include "symrec/symmetry.hpp"

#include <map>
#include <vector>

namespace symrec {

/// Correlation values G_P = <P>_rho keyed by Pauli string. Values are clamped
/// by physics, not by us: |G_P| <= 1 + 1e-9 is enforced, and the all-identity
/// string must carry 1 within 1e-9 when present.
class CorrelationSet {
  public:
    explicit CorrelationSet(HilbertSpaceSpec space);

    void set(const PauliString &p, double value);
    bool contains(const PauliString &p) const;
    /// Throws missing_data_error when the string has no value.
    double at(const PauliString &p) const;

    const std::map<PauliString, double> &values() const { return values_; }
    const HilbertSpaceSpec &space() const { return space_; }
    int size() const { return static_cast<int>(values_.size()); }

  private:
    HilbertSpaceSpec space_;
    std::map<PauliString, double> values_;
};

class ReconstructionMap;

/// Coefficient operators B_P, one per minimal-basis string, satisfying
/// rho = sum_P <P>_rho B_P for every rho in the subspace.
ReconstructionMap build_reconstruction_map(const ObservableSubspace &subspace, double coeff_tol = 1e-10);

class ReconstructionMap {
  public:
    const ObservableSubspace &subspace() const { return subspace_; }
    const std::map<PauliString, HermitianOperator> &entries() const { return entries_; }
    std::vector<PauliString> keys() const;
    int size() const { return static_cast<int>(entries_.size()); }

  private:
    ReconstructionMap(ObservableSubspace subspace, std::map<PauliString, HermitianOperator> entries);
    friend ReconstructionMap build_reconstruction_map(const ObservableSubspace &, double);

    ObservableSubspace subspace_;
    std::map<PauliString, HermitianOperator> entries_;
};

/// The Pauli strings with nonzero projection onto the subspace, in
/// lexicographic order: exactly { P : ||project_onto(subspace, P / ||P||)|| >
/// coeff_tol }. This set is a property of the subspace, not of the basis used
/// to present it.
std::vector<PauliString> minimal_reconstruction_basis(const ObservableSubspace &subspace,
                                                      double coeff_tol = 1e-10);

/// Expectation values of rho over the given strings.
CorrelationSet correlations_of(const DensityOperator &rho, const std::vector<PauliString> &basis);

/// Evaluates sum_P g(P) B_P. Every key of the map must have a value
/// (missing_data_error lists the absent ones); surplus keys in g are skipped
/// and reported through `ignored` when given.
HermitianOperator reconstruct(const ReconstructionMap &map, const CorrelationSet &g,
                              std::vector<PauliString> *ignored = nullptr);

/// Clip negative eigenvalues to zero and renormalize the trace to one. Inputs
/// that are already valid density operators pass through bit for bit. The
/// trace must be positive.
DensityOperator psd_repair(const HermitianOperator &a);

} // namespace symrec
