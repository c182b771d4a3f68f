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

#include "symrec/reconstruction.hpp"

#include "symrec/errors.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace symrec {

namespace {

constexpr double kValueSlack = 1e-9;

} // namespace

CorrelationSet::CorrelationSet(HilbertSpaceSpec space) : space_(space) { validate_space(space_); }

void CorrelationSet::set(const PauliString &p, double value) {
    if(p.size() != space_.num_sites)
        throw std::invalid_argument("correlation key " + p.str() + " does not match num_sites " +
                                    std::to_string(space_.num_sites));
    if(!std::isfinite(value) || std::abs(value) > 1.0 + kValueSlack)
        throw std::invalid_argument("correlation value " + std::to_string(value) + " for " + p.str() +
                                    " is outside [-1, 1]");
    if(p.is_identity() && std::abs(value - 1.0) > kValueSlack)
        throw std::invalid_argument("the identity correlation must be 1, got " + std::to_string(value));
    values_.insert_or_assign(p, value);
}

bool CorrelationSet::contains(const PauliString &p) const { return values_.count(p) > 0; }

double CorrelationSet::at(const PauliString &p) const {
    auto it = values_.find(p);
    if(it == values_.end()) throw missing_data_error({p.str()});
    return it->second;
}

ReconstructionMap::ReconstructionMap(ObservableSubspace subspace,
                                     std::map<PauliString, HermitianOperator> entries)
    : subspace_(std::move(subspace)), entries_(std::move(entries)) {}

std::vector<PauliString> ReconstructionMap::keys() const {
    std::vector<PauliString> out;
    out.reserve(entries_.size());
    for(const auto &[p, op] : entries_) out.push_back(p);
    return out;
}

std::vector<PauliString> minimal_reconstruction_basis(const ObservableSubspace &subspace,
                                                      double coeff_tol) {
    const HilbertSpaceSpec &space = subspace.space();
    if(space.local_dim != 2)
        throw std::invalid_argument("the minimal reconstruction basis requires local_dim == 2");
    const double n = static_cast<double>(space.dim());
    std::vector<PauliString> out;
    for(const auto &p : PauliString::all(space.num_sites)) {
        HermitianOperator pm = materialize_pauli(p, space);
        double norm_sq = 0;
        for(const auto &b : subspace.basis()) {
            const double coeff = hs_inner(b, pm);
            norm_sq += coeff * coeff;
        }
        // the projection of the unit-normalized string has norm sqrt(norm_sq / n)
        if(std::sqrt(norm_sq / n) > coeff_tol) out.push_back(p);
    }
    return out;
}

ReconstructionMap build_reconstruction_map(const ObservableSubspace &subspace, double coeff_tol) {
    const HilbertSpaceSpec &space = subspace.space();
    const double n = static_cast<double>(space.dim());
    std::map<PauliString, HermitianOperator> entries;
    for(const auto &p : minimal_reconstruction_basis(subspace, coeff_tol)) {
        HermitianOperator pm = materialize_pauli(p, space);
        Matrix acc = Matrix::Zero(space.dim(), space.dim());
        for(const auto &b : subspace.basis()) acc += (hs_inner(b, pm) / n) * b.matrix();
        entries.emplace(p, HermitianOperator(std::move(acc), space));
    }
    return ReconstructionMap(subspace, std::move(entries));
}

CorrelationSet correlations_of(const DensityOperator &rho, const std::vector<PauliString> &basis) {
    CorrelationSet g(rho.space());
    for(const auto &p : basis) g.set(p, expectation(rho, materialize_pauli(p, rho.space())));
    return g;
}

HermitianOperator reconstruct(const ReconstructionMap &map, const CorrelationSet &g,
                              std::vector<PauliString> *ignored) {
    if(!(g.space() == map.subspace().space()))
        throw std::invalid_argument("correlation set and reconstruction map are on different spaces");
    std::vector<std::string> missing;
    for(const auto &[p, op] : map.entries())
        if(!g.contains(p)) missing.push_back(p.str());
    if(!missing.empty()) throw missing_data_error(missing);
    if(ignored) {
        ignored->clear();
        for(const auto &[p, value] : g.values())
            if(map.entries().find(p) == map.entries().end()) ignored->push_back(p);
    }
    const long n = map.subspace().space().dim();
    Matrix acc = Matrix::Zero(n, n);
    for(const auto &[p, op] : map.entries()) acc += g.at(p) * op.matrix();
    return HermitianOperator(std::move(acc), map.subspace().space());
}

DensityOperator psd_repair(const HermitianOperator &a) {
    const double trace = a.matrix().trace().real();
    if(trace <= 0) throw std::invalid_argument("psd_repair requires a positive trace, got " +
                                               std::to_string(trace));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
    if(solver.info() != Eigen::Success) throw numerical_error("eigendecomposition failed");
    const Eigen::VectorXd vals = solver.eigenvalues();
    if(vals.minCoeff() >= 0.0) {
        if(std::abs(trace - 1.0) <= 1e-14) return DensityOperator(a);
        return DensityOperator(HermitianOperator(a.matrix() / trace, a.space()));
    }
    const Eigen::VectorXd clipped = vals.cwiseMax(0.0);
    Matrix repaired =
        solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
    repaired = (repaired + repaired.adjoint()) / 2.0;
    repaired /= repaired.trace().real();
    return DensityOperator(HermitianOperator(std::move(repaired), a.space()));
}

} // namespace symrec
