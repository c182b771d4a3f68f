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

#include "symrec/simulate.hpp"

#include "symrec/errors.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace symrec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Matrix psd_sqrt(const Matrix &a) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if(solver.info() != Eigen::Success) throw numerical_error("eigendecomposition failed");
    const Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

} // namespace

DensityOperator random_symmetric_state(const ObservableSubspace &subspace, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    const long n = subspace.space().dim();
    Matrix acc = Matrix::Zero(n, n);
    for(const auto &b : subspace.basis()) acc += dist(rng) * b.matrix();
    acc = (acc + acc.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(acc, Eigen::EigenvaluesOnly);
    if(solver.info() != Eigen::Success) throw numerical_error("eigendecomposition failed");
    const double min_eig = solver.eigenvalues().minCoeff();
    acc += (std::abs(min_eig) + 0.01) * Matrix::Identity(n, n);
    acc /= acc.trace().real();
    return DensityOperator(std::move(acc), subspace.space());
}

DensityOperator random_symmetric_state(const SymmetrySpec &spec, std::uint64_t seed) {
    return random_symmetric_state(commutant(spec), seed);
}

CorrelationSet sample_correlations(const DensityOperator &rho, const std::vector<PauliString> &basis,
                                   const ShotPlan &plan) {
    if(plan.shots_per_string < 1) throw std::invalid_argument("shots_per_string must be >= 1");
    CorrelationSet g(rho.space());
    const long shots = plan.shots_per_string;
    for(const auto &p : basis) {
        if(p.is_identity()) {
            g.set(p, 1.0);
            continue;
        }
        const double truth = expectation(rho, materialize_pauli(p, rho.space()));
        const double prob_plus = std::clamp((1.0 + truth) / 2.0, 0.0, 1.0);
        std::mt19937_64 rng(splitmix64(plan.seed ^ p.code()));
        std::binomial_distribution<long> outcomes(shots, prob_plus);
        const long plus = outcomes(rng);
        g.set(p, static_cast<double>(2 * plus - shots) / static_cast<double>(shots));
    }
    return g;
}

double fidelity(const DensityOperator &rho, const DensityOperator &sigma) {
    if(!(rho.space() == sigma.space()))
        throw std::invalid_argument("fidelity requires states on the same space");
    const Matrix root = psd_sqrt(rho.matrix());
    Matrix inner = root * sigma.matrix() * root;
    inner = (inner + inner.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(inner, Eigen::EigenvaluesOnly);
    if(solver.info() != Eigen::Success) throw numerical_error("eigendecomposition failed");
    const double sum = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::clamp(sum * sum, 0.0, 1.0);
}

ReductionReport reduction_report(const SymmetrySpec &spec) {
    ReductionReport report;
    report.full_count = 1;
    for(int i = 0; i < 2 * spec.space().num_sites; ++i) report.full_count *= 2;
    ObservableSubspace sub = commutant(spec);
    report.mcso_dim = sub.dim();
    report.minimal_basis_size = static_cast<long>(minimal_reconstruction_basis(sub).size());
    report.reduction_factor =
        static_cast<double>(report.full_count) / static_cast<double>(report.minimal_basis_size);
    return report;
}

} // namespace symrec
