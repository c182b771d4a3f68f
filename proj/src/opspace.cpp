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

#include "symrec/opspace.hpp"

#include "symrec/errors.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace symrec {

namespace {

constexpr double kHermiticityTol = 1e-12;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-10;

std::string space_str(const HilbertSpaceSpec &s) {
    return "{num_sites=" + std::to_string(s.num_sites) + ", local_dim=" + std::to_string(s.local_dim) + "}";
}

void require_same_space(const HilbertSpaceSpec &a, const HilbertSpaceSpec &b, const char *where) {
    if(!(a == b))
        throw std::invalid_argument(std::string(where) + ": operators live on different spaces " + space_str(a) +
                                    " vs " + space_str(b));
}

} // namespace

void validate_space(const HilbertSpaceSpec &space) {
    if(space.num_sites < 1) throw std::invalid_argument("num_sites must be >= 1");
    if(space.local_dim < 2) throw std::invalid_argument("local_dim must be >= 2");
}

char pauli_letter(Pauli p) {
    switch(p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    throw std::invalid_argument("invalid Pauli label");
}

const Eigen::Matrix2cd &pauli_matrix(Pauli p) {
    static const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    static const Eigen::Matrix2cd sx = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    static const Eigen::Matrix2cd sy = (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    static const Eigen::Matrix2cd sz = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    switch(p) {
        case Pauli::I: return id;
        case Pauli::X: return sx;
        case Pauli::Y: return sy;
        case Pauli::Z: return sz;
    }
    throw std::invalid_argument("invalid Pauli label");
}

PauliString::PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {
    if(labels_.empty()) throw std::invalid_argument("PauliString must have at least one site");
}

PauliString PauliString::parse(std::string_view text) {
    if(text.empty()) throw std::invalid_argument("empty Pauli string");
    std::vector<Pauli> labels;
    labels.reserve(text.size());
    for(char c : text) {
        switch(std::toupper(static_cast<unsigned char>(c))) {
            case 'I': case '0': labels.push_back(Pauli::I); break;
            case 'X': case '1': labels.push_back(Pauli::X); break;
            case 'Y': case '2': labels.push_back(Pauli::Y); break;
            case 'Z': case '3': labels.push_back(Pauli::Z); break;
            default:
                throw std::invalid_argument("invalid Pauli label '" + std::string(1, c) + "' in \"" +
                                            std::string(text) + "\"");
        }
    }
    return PauliString(std::move(labels));
}

PauliString PauliString::identity(int num_sites) {
    if(num_sites < 1) throw std::invalid_argument("num_sites must be >= 1");
    return PauliString(std::vector<Pauli>(static_cast<size_t>(num_sites), Pauli::I));
}

std::vector<PauliString> PauliString::all(int num_sites) {
    if(num_sites < 1) throw std::invalid_argument("num_sites must be >= 1");
    if(num_sites > 31) throw std::invalid_argument("num_sites too large to enumerate");
    std::uint64_t count = 1;
    for(int i = 0; i < num_sites; ++i) count *= 4;
    std::vector<PauliString> out;
    out.reserve(count);
    for(std::uint64_t c = 0; c < count; ++c) {
        std::vector<Pauli> labels(static_cast<size_t>(num_sites));
        std::uint64_t rest = c;
        for(int site = num_sites - 1; site >= 0; --site) {
            labels[static_cast<size_t>(site)] = static_cast<Pauli>(rest % 4);
            rest /= 4;
        }
        out.emplace_back(std::move(labels));
    }
    return out;
}

bool PauliString::is_identity() const {
    return std::all_of(labels_.begin(), labels_.end(), [](Pauli p) { return p == Pauli::I; });
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(labels_.size());
    for(Pauli p : labels_) s.push_back(pauli_letter(p));
    return s;
}

std::string PauliString::digits() const {
    std::string s;
    s.reserve(labels_.size());
    for(Pauli p : labels_) s.push_back(static_cast<char>('0' + static_cast<int>(p)));
    return s;
}

std::uint64_t PauliString::code() const {
    std::uint64_t c = 0;
    for(Pauli p : labels_) c = c * 4 + static_cast<std::uint64_t>(p);
    return c;
}

HermitianOperator::HermitianOperator(Matrix matrix, HilbertSpaceSpec space)
    : matrix_(std::move(matrix)), space_(space) {
    validate_space(space_);
    if(matrix_.rows() != matrix_.cols()) throw std::invalid_argument("operator matrix must be square");
    if(matrix_.rows() != space_.dim())
        throw std::invalid_argument("matrix dimension " + std::to_string(matrix_.rows()) +
                                    " does not match space dimension " + std::to_string(space_.dim()));
    const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
    const double residual = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if(residual > kHermiticityTol * scale)
        throw std::invalid_argument("matrix is not Hermitian: residual " + std::to_string(residual) +
                                    " exceeds tolerance");
}

DensityOperator::DensityOperator(HermitianOperator op) : op_(std::move(op)) {
    const Complex tr = op_.matrix().trace();
    if(std::abs(tr - Complex(1.0, 0.0)) > kTraceTol)
        throw std::invalid_argument("density operator trace deviates from 1 by " +
                                    std::to_string(std::abs(tr - Complex(1.0, 0.0))));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op_.matrix(), Eigen::EigenvaluesOnly);
    if(solver.info() != Eigen::Success) throw numerical_error("eigenvalue computation failed");
    const double min_eig = solver.eigenvalues().minCoeff();
    if(min_eig < -kPsdTol)
        throw std::invalid_argument("density operator has negative eigenvalue " + std::to_string(min_eig));
}

DensityOperator pure_state(const Vector &psi, const HilbertSpaceSpec &space) {
    validate_space(space);
    if(psi.size() != space.dim())
        throw std::invalid_argument("state vector length does not match space dimension");
    const double norm = psi.norm();
    if(norm < 1e-14) throw std::invalid_argument("cannot normalize a zero state vector");
    const Vector unit = psi / norm;
    return DensityOperator(HermitianOperator(unit * unit.adjoint(), space));
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for(Eigen::Index i = 0; i < a.rows(); ++i)
        for(Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

HermitianOperator materialize_pauli(const PauliString &p, const HilbertSpaceSpec &space) {
    validate_space(space);
    if(p.size() != space.num_sites)
        throw std::invalid_argument("Pauli string length " + std::to_string(p.size()) +
                                    " does not match num_sites " + std::to_string(space.num_sites));
    if(space.local_dim != 2)
        throw std::invalid_argument("Pauli strings require local_dim == 2");
    Matrix m = pauli_matrix(p.label(0));
    for(int site = 1; site < p.size(); ++site) m = kron(m, pauli_matrix(p.label(site)));
    return HermitianOperator(std::move(m), space);
}

double hs_inner(const HermitianOperator &a, const HermitianOperator &b) {
    require_same_space(a.space(), b.space(), "hs_inner");
    // tr(AB) with B Hermitian equals the Frobenius inner product <A, B>.
    const Complex sum = (a.matrix().array() * b.matrix().array().conjugate()).sum();
    const double scale = std::max(1.0, a.hs_norm() * b.hs_norm());
    if(std::abs(sum.imag()) > 1e-12 * scale)
        throw numerical_error("hs_inner produced a non-real value; inputs were not Hermitian");
    return sum.real();
}

double expectation(const DensityOperator &rho, const HermitianOperator &a) {
    return hs_inner(rho.op(), a);
}

DensityOperator partial_trace(const DensityOperator &rho, const std::vector<int> &keep_sites) {
    const HilbertSpaceSpec &space = rho.space();
    const int m = space.num_sites;
    const int d = space.local_dim;
    if(keep_sites.empty()) throw std::invalid_argument("keep_sites must be nonempty");
    for(size_t i = 0; i < keep_sites.size(); ++i) {
        if(keep_sites[i] < 1 || keep_sites[i] > m)
            throw std::invalid_argument("keep site " + std::to_string(keep_sites[i]) + " outside 1.." +
                                        std::to_string(m));
        if(i > 0 && keep_sites[i] <= keep_sites[i - 1])
            throw std::invalid_argument("keep_sites must be strictly increasing");
    }
    if(static_cast<int>(keep_sites.size()) == m) return rho;

    // stride of site j (1-based): d^(m-j); site 1 varies slowest.
    std::vector<long> stride(static_cast<size_t>(m));
    long s = 1;
    for(int j = m; j >= 1; --j) {
        stride[static_cast<size_t>(j - 1)] = s;
        s *= d;
    }
    std::vector<long> keep_stride, traced_stride;
    {
        size_t ki = 0;
        for(int j = 1; j <= m; ++j) {
            if(ki < keep_sites.size() && keep_sites[ki] == j) {
                keep_stride.push_back(stride[static_cast<size_t>(j - 1)]);
                ++ki;
            } else {
                traced_stride.push_back(stride[static_cast<size_t>(j - 1)]);
            }
        }
    }
    auto offsets = [d](const std::vector<long> &strides) {
        std::vector<long> offs{0};
        for(long st : strides) {
            std::vector<long> next;
            next.reserve(offs.size() * static_cast<size_t>(d));
            for(long o : offs)
                for(int v = 0; v < d; ++v) next.push_back(o + v * st);
            offs = std::move(next);
        }
        return offs;
    };
    const std::vector<long> keep_off = offsets(keep_stride);
    const std::vector<long> traced_off = offsets(traced_stride);

    const Matrix &full = rho.matrix();
    Matrix out = Matrix::Zero(static_cast<long>(keep_off.size()), static_cast<long>(keep_off.size()));
    for(size_t r = 0; r < keep_off.size(); ++r)
        for(size_t c = 0; c < keep_off.size(); ++c) {
            Complex acc = 0;
            for(long t : traced_off) acc += full(keep_off[r] + t, keep_off[c] + t);
            out(static_cast<long>(r), static_cast<long>(c)) = acc;
        }
    HilbertSpaceSpec reduced{static_cast<int>(keep_sites.size()), d};
    return DensityOperator(HermitianOperator(std::move(out), reduced));
}

HermitianOperator pauli_sum(const std::vector<std::pair<PauliString, double>> &terms,
                            const HilbertSpaceSpec &space) {
    if(terms.empty()) throw std::invalid_argument("pauli_sum requires at least one term");
    Matrix acc = Matrix::Zero(space.dim(), space.dim());
    for(const auto &[string, coeff] : terms) acc += coeff * materialize_pauli(string, space).matrix();
    return HermitianOperator(std::move(acc), space);
}

HermitianOperator tensor(const std::vector<HermitianOperator> &ops) {
    if(ops.empty()) throw std::invalid_argument("tensor requires at least one operator");
    Matrix m = ops[0].matrix();
    int sites = ops[0].space().num_sites;
    const int d = ops[0].space().local_dim;
    for(size_t i = 1; i < ops.size(); ++i) {
        if(ops[i].space().local_dim != d)
            throw std::invalid_argument("tensor factors must share local_dim");
        m = kron(m, ops[i].matrix());
        sites += ops[i].space().num_sites;
    }
    return HermitianOperator(std::move(m), HilbertSpaceSpec{sites, d});
}

} // namespace symrec
