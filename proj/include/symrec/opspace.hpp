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

#include <Eigen/Dense>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symrec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tensor-product structure of the underlying Hilbert space. Site 1 is the
/// leftmost (slowest-varying) factor of every Kronecker product. local_dim is
/// fixed to 2 in v1; it is carried so higher local dimensions stay a type-level
/// extension rather than a rewrite.
struct HilbertSpaceSpec {
    int num_sites = 1;
    int local_dim = 2;

    long dim() const {
        long d = 1;
        for(int i = 0; i < num_sites; ++i) d *= local_dim;
        return d;
    }
    bool operator==(const HilbertSpaceSpec &) const = default;
};

/// Throws std::invalid_argument unless num_sites >= 1 and local_dim >= 2.
void validate_space(const HilbertSpaceSpec &space);

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter(Pauli p);
const Eigen::Matrix2cd &pauli_matrix(Pauli p);

/// Label tuple over {I,X,Y,Z}^m. Digit form matches the subscript convention
/// I=0, X=1, Y=2, Z=3, site 1 first. Ordering is lexicographic with I < X < Y < Z.
class PauliString {
  public:
    explicit PauliString(std::vector<Pauli> labels);

    /// Accepts the letter form "IZXY" and the digit form "0312".
    static PauliString parse(std::string_view text);
    static PauliString identity(int num_sites);
    /// All 4^m strings in lexicographic order.
    static std::vector<PauliString> all(int num_sites);

    int size() const { return static_cast<int>(labels_.size()); }
    Pauli label(int site) const { return labels_[static_cast<size_t>(site)]; }
    const std::vector<Pauli> &labels() const { return labels_; }
    bool is_identity() const;

    std::string str() const;
    std::string digits() const;
    /// Base-4 code with site 1 as the most significant digit; unique for fixed m.
    std::uint64_t code() const;

    auto operator<=>(const PauliString &) const = default;

  private:
    std::vector<Pauli> labels_;
};

/// Dense Hermitian matrix tied to its Hilbert space. Construction rejects
/// matrices that deviate from their own adjoint by more than
/// 1e-12 * max(1, max |entry|); violations are an error, not a silent
/// symmetrization.
class HermitianOperator {
  public:
    HermitianOperator(Matrix matrix, HilbertSpaceSpec space);

    const Matrix &matrix() const { return matrix_; }
    const HilbertSpaceSpec &space() const { return space_; }
    long dim() const { return matrix_.rows(); }
    double hs_norm() const { return matrix_.norm(); }

  private:
    Matrix matrix_;
    HilbertSpaceSpec space_;
};

/// Hermitian, unit trace within 1e-10, eigenvalues >= -1e-10.
class DensityOperator {
  public:
    explicit DensityOperator(HermitianOperator op);
    DensityOperator(Matrix matrix, HilbertSpaceSpec space)
        : DensityOperator(HermitianOperator(std::move(matrix), space)) {}

    const HermitianOperator &op() const { return op_; }
    const Matrix &matrix() const { return op_.matrix(); }
    const HilbertSpaceSpec &space() const { return op_.space(); }

  private:
    HermitianOperator op_;
};

/// |psi><psi| on the given space. The vector is normalized first; a zero vector
/// is rejected.
DensityOperator pure_state(const Vector &psi, const HilbertSpaceSpec &space);

/// Dense Kronecker product of the single-site Pauli matrices in site order.
HermitianOperator materialize_pauli(const PauliString &p, const HilbertSpaceSpec &space);

/// tr(ab). Real for Hermitian inputs; the imaginary residue is checked against
/// 1e-12 * scale and discarded.
double hs_inner(const HermitianOperator &a, const HermitianOperator &b);

/// tr(rho a).
double expectation(const DensityOperator &rho, const HermitianOperator &a);

/// Reduced density operator on keep_sites (1-based, strictly increasing,
/// nonempty subset of 1..m). Keeping every site returns rho unchanged.
DensityOperator partial_trace(const DensityOperator &rho, const std::vector<int> &keep_sites);

/// Kronecker product in list order.
HermitianOperator tensor(const std::vector<HermitianOperator> &ops);

/// Sum of real-weighted Pauli strings, e.g. a Hamiltonian or a lifted
/// generator. At least one term is required.
HermitianOperator pauli_sum(const std::vector<std::pair<PauliString, double>> &terms,
                            const HilbertSpaceSpec &space);

/// Kronecker product of two raw matrices, a on the slower-varying index.
Matrix kron(const Matrix &a, const Matrix &b);

} // namespace symrec

template <> struct std::hash<symrec::PauliString> {
    size_t operator()(const symrec::PauliString &p) const noexcept {
        // code() is injective for fixed length; mix in the length for maps
        // holding mixed sizes.
        return std::hash<std::uint64_t>{}(p.code() * 31 + static_cast<std::uint64_t>(p.size()));
    }
};
