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

#include "symrec/models.hpp"

#include "symrec/errors.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace symrec {

namespace {

constexpr double kVertexSlack = 1e-9;

double digit_correlation(const CorrelationSet &g, const char *digits,
                         std::vector<std::string> &missing) {
    const PauliString p = PauliString::parse(digits);
    if(!g.contains(p)) {
        missing.push_back(p.str());
        return 0.0;
    }
    return g.at(p);
}

} // namespace

bool Vertex8Parameters::psd_ok() const {
    if(r1 < -kVertexSlack || r2 < -kVertexSlack || r3 < -kVertexSlack || r4 < -kVertexSlack)
        return false;
    return std::norm(z1) <= r1 * r2 + kVertexSlack && std::norm(z2) <= r3 * r4 + kVertexSlack;
}

HermitianOperator ising_hamiltonian(const IsingParameters &p) {
    if(p.num_sites < 2) throw std::invalid_argument("the Ising chain needs at least 2 sites");
    if(p.coupling <= 0) throw std::invalid_argument("the coupling J must be positive");
    const HilbertSpaceSpec space{p.num_sites, 2};
    const long n = space.dim();
    Matrix h = Matrix::Zero(n, n);
    for(long idx = 0; idx < n; ++idx) {
        // spin of site j (1-based): +1 for up; site 1 is the highest bit
        auto spin = [&](int j) {
            return ((idx >> (p.num_sites - j)) & 1) == 0 ? 1.0 : -1.0;
        };
        double energy = 0;
        for(int j = 1; j < p.num_sites; ++j) energy -= p.coupling * spin(j) * spin(j + 1);
        if(p.periodic) energy -= p.coupling * spin(p.num_sites) * spin(1);
        for(int j = 1; j <= p.num_sites; ++j) energy += p.field * spin(j);
        h(idx, idx) = energy;
    }
    return HermitianOperator(std::move(h), space);
}

DensityOperator cat_state(const CatStateSpec &spec) {
    if(spec.num_sites < 1) throw std::invalid_argument("num_sites must be >= 1");
    const double total = std::norm(spec.alpha) + std::norm(spec.beta);
    if(std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("cat amplitudes are not normalized: |alpha|^2 + |beta|^2 = " +
                                    std::to_string(total));
    const HilbertSpaceSpec space{spec.num_sites, 2};
    Vector psi = Vector::Zero(space.dim());
    psi(0) = spec.alpha;
    psi(space.dim() - 1) = spec.beta;
    return pure_state(psi, space);
}

Vertex8Parameters vertex8_from_correlations(const CorrelationSet &g) {
    if(!(g.space() == HilbertSpaceSpec{2, 2}))
        throw std::invalid_argument("the 8-vertex form is defined on two qubit sites");
    std::vector<std::string> missing;
    const double g00 = digit_correlation(g, "00", missing);
    const double g03 = digit_correlation(g, "03", missing);
    const double g30 = digit_correlation(g, "30", missing);
    const double g33 = digit_correlation(g, "33", missing);
    const double g11 = digit_correlation(g, "11", missing);
    const double g22 = digit_correlation(g, "22", missing);
    const double g12 = digit_correlation(g, "12", missing);
    const double g21 = digit_correlation(g, "21", missing);
    if(!missing.empty()) throw missing_data_error(missing);
    if(std::abs(g00 - 1.0) > kVertexSlack)
        throw std::invalid_argument("the identity correlation must be 1, got " + std::to_string(g00));

    Vertex8Parameters v;
    v.r1 = (g33 + g30 + g03 + 1.0) / 4.0;
    v.r2 = (g33 - g30 - g03 + 1.0) / 4.0;
    v.r3 = (g30 - g33 - g03 + 1.0) / 4.0;
    v.r4 = (g03 - g33 - g30 + 1.0) / 4.0;
    v.z1 = Complex(g11 - g22, -(g12 + g21)) / 4.0;
    v.z2 = Complex(g11 + g22, g12 - g21) / 4.0;
    return v;
}

HermitianOperator vertex8_to_matrix(const Vertex8Parameters &v) {
    const double total = v.r1 + v.r2 + v.r3 + v.r4;
    if(std::abs(total - 1.0) > kVertexSlack)
        throw std::invalid_argument("populations must sum to 1, got " + std::to_string(total));
    // the display order {up up, down down, up down, down up} maps to
    // computational indices via this fixed permutation
    constexpr std::array<int, 4> perm{0, 3, 1, 2};
    Matrix display = Matrix::Zero(4, 4);
    display(0, 0) = v.r1;
    display(1, 1) = v.r2;
    display(2, 2) = v.r3;
    display(3, 3) = v.r4;
    display(0, 1) = v.z1;
    display(1, 0) = std::conj(v.z1);
    display(2, 3) = v.z2;
    display(3, 2) = std::conj(v.z2);
    Matrix out = Matrix::Zero(4, 4);
    for(int a = 0; a < 4; ++a)
        for(int b = 0; b < 4; ++b) out(perm[a], perm[b]) = display(a, b);
    return HermitianOperator(std::move(out), HilbertSpaceSpec{2, 2});
}

DensityOperator ground_state(const HermitianOperator &h, double degeneracy_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if(solver.info() != Eigen::Success) throw numerical_error("eigendecomposition failed");
    const Eigen::VectorXd vals = solver.eigenvalues();
    const long n = vals.size();
    const double radius = std::max(std::abs(vals(0)), std::abs(vals(n - 1)));
    const double threshold = vals(0) + degeneracy_tol * std::max(1.0, radius);
    Matrix acc = Matrix::Zero(n, n);
    long count = 0;
    for(long i = 0; i < n && vals(i) <= threshold; ++i, ++count)
        acc += solver.eigenvectors().col(i) * solver.eigenvectors().col(i).adjoint();
    acc /= static_cast<double>(count);
    acc = (acc + acc.adjoint()) / 2.0;
    return DensityOperator(std::move(acc), h.space());
}

DensityOperator thermal_state(const HermitianOperator &h, double inv_temperature) {
    if(inv_temperature < 0) throw std::invalid_argument("inv_temperature must be >= 0");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if(solver.info() != Eigen::Success) throw numerical_error("eigendecomposition failed");
    const Eigen::VectorXd vals = solver.eigenvalues();
    Eigen::VectorXd weights =
        (-(inv_temperature * (vals.array() - vals.minCoeff()))).exp().matrix();
    weights /= weights.sum();
    Matrix rho = solver.eigenvectors() * weights.asDiagonal() * solver.eigenvectors().adjoint();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityOperator(std::move(rho), h.space());
}

} // namespace symrec
