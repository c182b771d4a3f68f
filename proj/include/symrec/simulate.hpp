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

#include <cstdint>
#include <vector>

namespace symrec {

/// Measurement budget: N repeated +-1 outcomes per Pauli string, derived
/// deterministically from the seed. Identical (plan, state, basis) triples
/// give identical estimates.
struct ShotPlan {
    long shots_per_string = 1;
    std::uint64_t seed = 0;
};

/// How much the symmetry shrinks the measurement problem.
struct ReductionReport {
    long full_count = 0;         // 4^m, the unconstrained correlation count
    long mcso_dim = 0;           // dimension of the symmetric operator space
    long minimal_basis_size = 0; // strings actually measured
    double reduction_factor = 0; // full_count / minimal_basis_size
};

/// Random density operator inside the commutant of the spec: standard-normal
/// coefficients on the orthonormal basis, spectrum shifted into the PSD cone,
/// trace normalized. Same seed, same state.
DensityOperator random_symmetric_state(const SymmetrySpec &spec, std::uint64_t seed);

/// Same draw over an already-computed subspace.
DensityOperator random_symmetric_state(const ObservableSubspace &subspace, std::uint64_t seed);

/// Finite-shot estimate of each <P>_rho: N simulated +-1 outcomes with
/// Prob(+1) = (1 + <P>)/2, reported as the sample mean. The all-identity
/// string is exact by definition and never sampled. Each string gets its own
/// RNG stream derived from plan.seed and the string code, so results do not
/// depend on evaluation order.
CorrelationSet sample_correlations(const DensityOperator &rho, const std::vector<PauliString> &basis,
                                   const ShotPlan &plan);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityOperator &rho, const DensityOperator &sigma);

/// Counts 4^m, the commutant dimension, and the minimal-basis size for the
/// spec's symmetry.
ReductionReport reduction_report(const SymmetrySpec &spec);

} // namespace symrec
