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

#include <vector>

namespace symrec {

/// A symmetry group given by Lie-algebra generators (each Hermitian A entering
/// exp(-itA)) and discrete unitary elements (e.g. a spin flip). Both empty
/// means the trivial group. Generators must live on the stated space; discrete
/// elements must be unitary within 1e-10.
class SymmetrySpec {
  public:
    explicit SymmetrySpec(HilbertSpaceSpec space);
    SymmetrySpec(HilbertSpaceSpec space, std::vector<HermitianOperator> generators,
                 std::vector<Matrix> discrete_elements = {});

    const HilbertSpaceSpec &space() const { return space_; }
    const std::vector<HermitianOperator> &generators() const { return generators_; }
    const std::vector<Matrix> &discrete_elements() const { return discrete_elements_; }
    bool trivial() const { return generators_.empty() && discrete_elements_.empty(); }

  private:
    HilbertSpaceSpec space_;
    std::vector<HermitianOperator> generators_;
    std::vector<Matrix> discrete_elements_;
};

/// Clustered spectrum of one Hermitian operator. basis_change holds the
/// eigenvectors column by column, ordered by ascending eigenvalue, so columns
/// belonging to block i are contiguous.
struct SpectralBlocks {
    std::vector<double> eigenvalues;
    std::vector<int> multiplicities;
    Matrix basis_change;

    int num_blocks() const { return static_cast<int>(eigenvalues.size()); }
};

class ObservableSubspace;

/// Orthonormal basis of the fixed-point operator space
///   { B Hermitian : [A_k, B] = 0 for all generators, u B u^dag = B for all
///     discrete elements }.
/// For the trivial spec this is all of A(V). rank_tol <= 0 selects the default
/// 1e-10 * dim. Output order is canonical: Pauli strings are projected in
/// lexicographic order and orthonormalized.
ObservableSubspace commutant(const SymmetrySpec &spec, double rank_tol = 0.0);

/// Basis of the symmetry-fixed operator subspace, orthonormal under hs_inner.
class ObservableSubspace {
  public:
    /// Validating factory: checks orthonormality (within ortho_tol) and that
    /// every element commutes with the generators and is fixed by the discrete
    /// elements (residual below residual_tol).
    static ObservableSubspace checked(std::vector<HermitianOperator> basis, SymmetrySpec source_spec,
                                      double ortho_tol = 1e-10, double residual_tol = 1e-9);

    const HilbertSpaceSpec &space() const { return source_spec_.space(); }
    const std::vector<HermitianOperator> &basis() const { return basis_; }
    const SymmetrySpec &source_spec() const { return source_spec_; }
    int dim() const { return static_cast<int>(basis_.size()); }

  private:
    struct Trusted {};
    ObservableSubspace(Trusted, std::vector<HermitianOperator> basis, SymmetrySpec source_spec);
    friend ObservableSubspace commutant(const SymmetrySpec &, double);

    std::vector<HermitianOperator> basis_;
    SymmetrySpec source_spec_;
};

/// Eigendecomposition of a with eigenvalues clustered into degenerate blocks:
/// two eigenvalues share a block iff their gap is at most
/// degeneracy_tol * max(1, spectral radius).
SpectralBlocks spectral_blocks(const HermitianOperator &a, double degeneracy_tol = 1e-8);

/// Sum of squared multiplicities: the dimension of the Hermitian commutant of
/// a single generator with these blocks.
long commutant_dim_from_blocks(const SpectralBlocks &blocks);

/// Orthogonal projection sum_i hs_inner(a, B_i) B_i onto the subspace.
HermitianOperator project_onto(const ObservableSubspace &subspace, const HermitianOperator &a);

/// Result of a symmetry test with the residuals behind the verdict.
struct SymmetryCheck {
    bool symmetric = false;
    double max_generator_residual = 0.0; // max_k Frobenius norm of [A_k, rho]
    double max_element_residual = 0.0;   // max_u Frobenius norm of u rho u^dag - rho
    double tol = 0.0;

    explicit operator bool() const { return symmetric; }
};

/// True iff every generator commutes with rho and every discrete element fixes
/// rho, all residuals measured in Frobenius norm against tol.
SymmetryCheck is_symmetric(const DensityOperator &rho, const SymmetrySpec &spec, double tol = 1e-9);

/// Symmetry survival under partial trace for a product group. Sites
/// 1..split_at carry spec1, the rest carry spec2. Requires rho symmetric under
/// the lifted product symmetry (std::invalid_argument otherwise, distinct from
/// a failing check). Returns whether the reduced state on sites 1..split_at is
/// symmetric under spec1; the theory says it always is.
bool check_lemma1(const DensityOperator &rho, const SymmetrySpec &spec1, const SymmetrySpec &spec2,
                  int split_at, double tol = 1e-9);

/// Symmetry survival for an eigenvector of a1 (x) a2 with nonzero eigenvalue:
/// returns whether tracing out the a2 factor of |psi><psi| leaves a state
/// symmetric under exp(-it a1). An eigenvalue of magnitude <= tol is rejected
/// ("zero eigenvalue, lemma inapplicable"), as is a psi that is no eigenvector.
bool check_lemma2(const Vector &psi, const HermitianOperator &a1, const HermitianOperator &a2,
                  double tol = 1e-9);

} // namespace symrec
