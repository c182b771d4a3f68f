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

#include "symrec/symmetry.hpp"

#include "symrec/errors.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace symrec {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kSweepTol = 1e-12;
constexpr int kMaxSweeps = 1000;
constexpr std::size_t kMaxClosure = 64;

void validate_spec_members(const HilbertSpaceSpec &space, const std::vector<HermitianOperator> &generators,
                           const std::vector<Matrix> &discrete_elements) {
    validate_space(space);
    for(const auto &g : generators)
        if(!(g.space() == space))
            throw std::invalid_argument("generator does not act on the symmetry spec's space");
    const long n = space.dim();
    for(const auto &u : discrete_elements) {
        if(u.rows() != n || u.cols() != n)
            throw std::invalid_argument("discrete element dimension does not match the space");
        const double residual = (u * u.adjoint() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
        if(residual > kUnitaryTol)
            throw std::invalid_argument("discrete element is not unitary: residual " +
                                        std::to_string(residual));
    }
}

// Orthogonal projector onto the commutant of one generator: rotate into its
// eigenbasis, drop entries linking distinct eigenvalue blocks, rotate back.
struct PinchMap {
    Matrix basis;                              // eigenvectors, blocks contiguous
    std::vector<std::pair<int, int>> blocks;   // (start, size) per eigenvalue cluster

    void apply(Matrix &b) const {
        Matrix rotated = basis.adjoint() * b * basis;
        Matrix kept = Matrix::Zero(rotated.rows(), rotated.cols());
        for(auto [start, size] : blocks)
            kept.block(start, start, size, size) = rotated.block(start, start, size, size);
        b = basis * kept * basis.adjoint();
    }
};

// Orthogonal projector onto the fixed space of a finite unitary group: the
// uniform average of u b u^dag over the whole group.
struct AverageMap {
    std::vector<Matrix> group;

    void apply(Matrix &b) const {
        Matrix acc = Matrix::Zero(b.rows(), b.cols());
        for(const auto &u : group) acc += u * b * u.adjoint();
        b = acc / static_cast<double>(group.size());
    }
};

// Multiplicative closure of the given unitaries, identity included. Bounded;
// an element of irrational rotation angle never closes and is rejected.
std::vector<Matrix> close_group(const std::vector<Matrix> &elements, long n) {
    std::vector<Matrix> group;
    group.push_back(Matrix::Identity(n, n));
    auto known = [&](const Matrix &candidate) {
        for(const auto &g : group)
            if((candidate - g).cwiseAbs().maxCoeff() < 1e-8) return true;
        return false;
    };
    std::size_t frontier = 0;
    for(const auto &u : elements)
        if(!known(u)) group.push_back(u);
    while(frontier < group.size()) {
        const Matrix base = group[frontier++];
        for(const auto &u : elements) {
            Matrix next = base * u;
            if(!known(next)) {
                group.push_back(std::move(next));
                if(group.size() > kMaxClosure)
                    throw std::invalid_argument(
                        "discrete symmetry elements generate a group larger than 64; "
                        "continuous rotations belong in generators");
            }
        }
    }
    return group;
}

} // namespace

SymmetrySpec::SymmetrySpec(HilbertSpaceSpec space) : space_(space) { validate_space(space_); }

SymmetrySpec::SymmetrySpec(HilbertSpaceSpec space, std::vector<HermitianOperator> generators,
                           std::vector<Matrix> discrete_elements)
    : space_(space), generators_(std::move(generators)), discrete_elements_(std::move(discrete_elements)) {
    validate_spec_members(space_, generators_, discrete_elements_);
}

SpectralBlocks spectral_blocks(const HermitianOperator &a, double degeneracy_tol) {
    if(degeneracy_tol < 0) throw std::invalid_argument("degeneracy_tol must be nonnegative");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
    if(solver.info() != Eigen::Success) throw numerical_error("eigendecomposition failed");
    const Eigen::VectorXd vals = solver.eigenvalues(); // ascending
    const long n = vals.size();
    const double radius = std::max(std::abs(vals(0)), std::abs(vals(n - 1)));
    const double gap_tol = degeneracy_tol * std::max(1.0, radius);

    SpectralBlocks blocks;
    blocks.basis_change = solver.eigenvectors();
    long start = 0;
    for(long i = 1; i <= n; ++i) {
        if(i == n || vals(i) - vals(i - 1) > gap_tol) {
            blocks.eigenvalues.push_back(vals.segment(start, i - start).mean());
            blocks.multiplicities.push_back(static_cast<int>(i - start));
            start = i;
        }
    }
    return blocks;
}

long commutant_dim_from_blocks(const SpectralBlocks &blocks) {
    long dim = 0;
    for(int n_i : blocks.multiplicities) dim += static_cast<long>(n_i) * n_i;
    return dim;
}

ObservableSubspace::ObservableSubspace(Trusted, std::vector<HermitianOperator> basis, SymmetrySpec source_spec)
    : basis_(std::move(basis)), source_spec_(std::move(source_spec)) {}

ObservableSubspace ObservableSubspace::checked(std::vector<HermitianOperator> basis, SymmetrySpec source_spec,
                                               double ortho_tol, double residual_tol) {
    for(const auto &b : basis)
        if(!(b.space() == source_spec.space()))
            throw std::invalid_argument("basis element does not act on the spec's space");
    for(std::size_t i = 0; i < basis.size(); ++i)
        for(std::size_t j = i; j < basis.size(); ++j) {
            const double expected = (i == j) ? 1.0 : 0.0;
            if(std::abs(hs_inner(basis[i], basis[j]) - expected) > ortho_tol)
                throw std::invalid_argument("basis is not orthonormal under the trace inner product");
        }
    for(const auto &b : basis) {
        for(const auto &g : source_spec.generators()) {
            const double residual = (g.matrix() * b.matrix() - b.matrix() * g.matrix()).norm();
            if(residual > residual_tol)
                throw std::invalid_argument("basis element does not commute with a generator");
        }
        for(const auto &u : source_spec.discrete_elements()) {
            const double residual = (u * b.matrix() * u.adjoint() - b.matrix()).norm();
            if(residual > residual_tol)
                throw std::invalid_argument("basis element is not fixed by a discrete element");
        }
    }
    return ObservableSubspace(Trusted{}, std::move(basis), std::move(source_spec));
}

ObservableSubspace commutant(const SymmetrySpec &spec, double rank_tol) {
    const HilbertSpaceSpec &space = spec.space();
    if(space.local_dim != 2)
        throw std::invalid_argument("commutant enumeration requires local_dim == 2");
    const long n = space.dim();
    if(n > 64)
        throw std::invalid_argument("commutant enumeration is supported up to 6 sites");
    const double tol = rank_tol > 0 ? rank_tol : 1e-10 * static_cast<double>(n);
    const double string_norm = std::sqrt(static_cast<double>(n));

    if(spec.trivial()) {
        std::vector<HermitianOperator> basis;
        for(const auto &p : PauliString::all(space.num_sites))
            basis.emplace_back(materialize_pauli(p, space).matrix() / string_norm, space);
        return ObservableSubspace(ObservableSubspace::Trusted{}, std::move(basis), spec);
    }

    std::vector<PinchMap> pinches;
    for(const auto &g : spec.generators()) {
        SpectralBlocks blocks = spectral_blocks(g);
        PinchMap map;
        map.basis = blocks.basis_change;
        int start = 0;
        for(int size : blocks.multiplicities) {
            map.blocks.emplace_back(start, size);
            start += size;
        }
        pinches.push_back(std::move(map));
    }
    AverageMap average;
    if(!spec.discrete_elements().empty()) average.group = close_group(spec.discrete_elements(), n);
    const std::size_t num_maps = pinches.size() + (average.group.empty() ? 0 : 1);

    auto project = [&](Matrix &b) {
        if(num_maps == 1) {
            if(!pinches.empty())
                pinches[0].apply(b);
            else
                average.apply(b);
            return;
        }
        for(int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            const Matrix before = b;
            for(const auto &p : pinches) p.apply(b);
            if(!average.group.empty()) average.apply(b);
            if((b - before).norm() < kSweepTol) return;
        }
        throw numerical_error("alternating projections onto the commutant did not converge");
    };

    std::vector<Vector> accepted;       // vectorized orthonormal basis, build order
    std::vector<HermitianOperator> basis;
    for(const auto &p : PauliString::all(space.num_sites)) {
        Matrix b = materialize_pauli(p, space).matrix() / string_norm;
        project(b);
        if(b.norm() <= tol) continue;
        Vector v = Eigen::Map<const Vector>(b.data(), n * n);
        for(int pass = 0; pass < 2; ++pass)
            for(const auto &q : accepted) v -= q.dot(v) * q;
        const double norm = v.norm();
        if(norm <= tol) continue;
        v /= norm;
        Matrix m = Eigen::Map<const Matrix>(v.data(), n, n);
        m = (m + m.adjoint()) / 2.0; // clear the roundoff skew before wrapping
        accepted.push_back(std::move(v));
        basis.emplace_back(std::move(m), space);
    }
    return ObservableSubspace(ObservableSubspace::Trusted{}, std::move(basis), spec);
}

HermitianOperator project_onto(const ObservableSubspace &subspace, const HermitianOperator &a) {
    if(!(a.space() == subspace.space()))
        throw std::invalid_argument("project_onto: operator is not on the subspace's space");
    Matrix acc = Matrix::Zero(a.dim(), a.dim());
    for(const auto &b : subspace.basis()) acc += hs_inner(a, b) * b.matrix();
    return HermitianOperator(std::move(acc), a.space());
}

SymmetryCheck is_symmetric(const DensityOperator &rho, const SymmetrySpec &spec, double tol) {
    if(!(rho.space() == spec.space()))
        throw std::invalid_argument("is_symmetric: state is not on the spec's space");
    SymmetryCheck check;
    check.tol = tol;
    for(const auto &g : spec.generators()) {
        const double residual = (g.matrix() * rho.matrix() - rho.matrix() * g.matrix()).norm();
        check.max_generator_residual = std::max(check.max_generator_residual, residual);
    }
    for(const auto &u : spec.discrete_elements()) {
        const double residual = (u * rho.matrix() * u.adjoint() - rho.matrix()).norm();
        check.max_element_residual = std::max(check.max_element_residual, residual);
    }
    check.symmetric = std::max(check.max_generator_residual, check.max_element_residual) <= tol;
    return check;
}

bool check_lemma1(const DensityOperator &rho, const SymmetrySpec &spec1, const SymmetrySpec &spec2,
                  int split_at, double tol) {
    const HilbertSpaceSpec &joint = rho.space();
    const int m = joint.num_sites;
    if(split_at < 1 || split_at >= m)
        throw std::invalid_argument("split_at must leave at least one site on each side");
    if(spec1.space().num_sites != split_at || spec2.space().num_sites != m - split_at)
        throw std::invalid_argument("partition sizes do not match the symmetry specs");
    if(spec1.space().local_dim != joint.local_dim || spec2.space().local_dim != joint.local_dim)
        throw std::invalid_argument("local dimensions do not match");

    const long n1 = spec1.space().dim();
    const long n2 = spec2.space().dim();
    const Matrix id1 = Matrix::Identity(n1, n1);
    const Matrix id2 = Matrix::Identity(n2, n2);
    std::vector<HermitianOperator> lifted;
    for(const auto &g : spec1.generators()) lifted.emplace_back(kron(g.matrix(), id2), joint);
    for(const auto &g : spec2.generators()) lifted.emplace_back(kron(id1, g.matrix()), joint);
    std::vector<Matrix> lifted_elements;
    for(const auto &u : spec1.discrete_elements()) lifted_elements.push_back(kron(u, id2));
    for(const auto &u : spec2.discrete_elements()) lifted_elements.push_back(kron(id1, u));
    SymmetrySpec product(joint, std::move(lifted), std::move(lifted_elements));

    SymmetryCheck pre = is_symmetric(rho, product, tol);
    if(!pre)
        throw std::invalid_argument("state is not symmetric under the product symmetry (residual " +
                                    std::to_string(std::max(pre.max_generator_residual,
                                                            pre.max_element_residual)) +
                                    "); the lemma does not apply");

    std::vector<int> keep(static_cast<std::size_t>(split_at));
    for(int i = 0; i < split_at; ++i) keep[static_cast<std::size_t>(i)] = i + 1;
    return static_cast<bool>(is_symmetric(partial_trace(rho, keep), spec1, tol));
}

bool check_lemma2(const Vector &psi, const HermitianOperator &a1, const HermitianOperator &a2,
                  double tol) {
    if(a1.space().local_dim != a2.space().local_dim)
        throw std::invalid_argument("local dimensions do not match");
    const HilbertSpaceSpec joint{a1.space().num_sites + a2.space().num_sites, a1.space().local_dim};
    if(psi.size() != joint.dim())
        throw std::invalid_argument("state vector length does not match the joint space");
    const double psi_norm = psi.norm();
    if(psi_norm < 1e-14) throw std::invalid_argument("cannot normalize a zero state vector");
    const Vector unit = psi / psi_norm;

    const Matrix a = kron(a1.matrix(), a2.matrix());
    const double lambda = (unit.adjoint() * a * unit).value().real();
    const double residual = (a * unit - lambda * unit).norm();
    if(residual > 1e-9 * std::max(1.0, a.norm()))
        throw std::invalid_argument("psi is not an eigenvector of a1 (x) a2 (residual " +
                                    std::to_string(residual) + ")");
    if(std::abs(lambda) <= tol)
        throw std::invalid_argument("zero eigenvalue, lemma inapplicable");

    std::vector<int> keep(static_cast<std::size_t>(a1.space().num_sites));
    for(int i = 0; i < a1.space().num_sites; ++i) keep[static_cast<std::size_t>(i)] = i + 1;
    DensityOperator reduced = partial_trace(pure_state(unit, joint), keep);
    return static_cast<bool>(is_symmetric(reduced, SymmetrySpec(a1.space(), {a1}), tol));
}

} // namespace symrec
