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
#include "symrec/reconstruction.hpp"
#include "symrec/symmetry.hpp"

#include <map>
#include <string>
#include <vector>

namespace symrec::io {

/// Every file this module reads or writes carries "version": "v1". Readers
/// reject anything else so old binaries fail loudly on future formats.
inline constexpr const char *kFileVersion = "v1";

/// Symmetry spec file:
///   { "version": "v1", "num_sites": 2, "local_dim": 2,
///     "generators": [ { "kind": "pauli_sum",
///                       "terms": [ { "string": "ZZ", "coefficient": 1.0 } ] },
///                     { "kind": "dense", "matrix": { ... } } ],
///     "discrete_elements": [ { "kind": "pauli_string", "string": "XX" },
///                            { "kind": "dense", "matrix": { ... } } ] }
/// Both operator lists are optional; absent or empty means the trivial group.
/// Malformed structure and invalid operators both surface as parse_error.
SymmetrySpec load_symmetry_spec(const std::string &path);

/// Correlation file:
///   { "version": "v1", "num_sites": 2,
///     "values": [ { "pauli": "ZZ", "value": 1.0 }, ... ] }
/// Strings accept letter or digit form; duplicates are rejected.
CorrelationSet load_correlations(const std::string &path);

/// State file: { "version": "v1", "num_sites": 2, "local_dim": 2,
/// "matrix": { ... } }. The matrix must pass density-operator validation.
DensityOperator load_state(const std::string &path);

void save_correlations(const CorrelationSet &g, const std::string &path,
                       const std::map<std::string, double> &diagnostics = {});

/// Writes a state file. Takes a raw matrix so a reconstruction that was not
/// PSD-repaired (and hence is no DensityOperator) can still be saved;
/// diagnostics land under a "diagnostics" key.
void save_state(const Matrix &rho, const HilbertSpaceSpec &space, const std::string &path,
                const std::map<std::string, double> &diagnostics = {});

/// Writes { mcso_dim, orthonormal_basis: [matrix...], minimal_basis:
/// ["II", ...] } for the subspace.
void save_mcso_basis(const ObservableSubspace &subspace,
                     const std::vector<PauliString> &minimal_basis, const std::string &path);

} // namespace symrec::io
