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

namespace symrec {

/// Ferromagnetic Ising chain in a longitudinal field,
///   H = -J sum_j sigma_z^j sigma_z^(j+1) + g sum_j sigma_z^j,
/// open boundary unless periodic is set (which adds the wrap-around bond).
struct IsingParameters {
    int num_sites = 2;
    double coupling = 1.0; // J > 0
    double field = 0.0;    // g
    bool periodic = false;
};

/// alpha |up...up> + beta |down...down> with |alpha|^2 + |beta|^2 = 1.
struct CatStateSpec {
    Complex alpha;
    Complex beta;
    int num_sites = 2;
};

/// Two-site reduced form: populations r1..r4 on {up up, down down, up down,
/// down up} and coherences z1 (up up <-> down down), z2 (up down <-> down up).
struct Vertex8Parameters {
    double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
    Complex z1, z2;

    /// Positive-semidefiniteness of the assembled matrix: r_i >= 0,
    /// |z1|^2 <= r1 r2 and |z2|^2 <= r3 r4, all up to 1e-9 slack.
    bool psd_ok() const;
};

/// Diagonal 2^m x 2^m Hamiltonian. Requires num_sites >= 2 and coupling > 0.
HermitianOperator ising_hamiltonian(const IsingParameters &p);

/// The pure cat state. For even num_sites it is the eigenvalue-1 eigenvector
/// of the parity string (x)_j sigma_z^j.
DensityOperator cat_state(const CatStateSpec &spec);

/// Closed-form inversion of the two-site correlation functions, keyed by the
/// digit strings {00, 03, 30, 33, 11, 22, 12, 21}. All eight must be present
/// and G_00 must be 1.
Vertex8Parameters vertex8_from_correlations(const CorrelationSet &g);

/// Assembles the 4x4 matrix in computational order. Checks sum r_i = 1 within
/// 1e-9; positivity is reported by psd_ok(), never enforced here.
HermitianOperator vertex8_to_matrix(const Vertex8Parameters &v);

/// Uniform mixture over the ground eigenspace: eigenvalues within
/// degeneracy_tol * max(1, spectral radius) of the minimum count as ground.
DensityOperator ground_state(const HermitianOperator &h, double degeneracy_tol = 1e-8);

/// exp(-beta h) / tr exp(-beta h), computed in the eigenbasis with the
/// spectrum shifted so the largest Boltzmann weight is exactly 1.
DensityOperator thermal_state(const HermitianOperator &h, double inv_temperature);

} // namespace symrec
