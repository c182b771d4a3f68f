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

#include "symrec/errors.hpp"
#include "symrec/opspace.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <unordered_set>

using namespace symrec;

namespace {
const HilbertSpaceSpec one_site{1, 2};
const HilbertSpaceSpec two_sites{2, 2};
const HilbertSpaceSpec three_sites{3, 2};
} // namespace

TEST_CASE("space validation and dimension") {
    CHECK(one_site.dim() == 2);
    CHECK(two_sites.dim() == 4);
    CHECK(HilbertSpaceSpec{10, 2}.dim() == 1024);
    CHECK(HilbertSpaceSpec{3, 3}.dim() == 27);
    CHECK_THROWS_AS(validate_space(HilbertSpaceSpec{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(validate_space(HilbertSpaceSpec{2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_space(HilbertSpaceSpec{-1, 2}), std::invalid_argument);
}

TEST_CASE("single-site Pauli matrices") {
    const Eigen::Matrix2cd &x = pauli_matrix(Pauli::X);
    const Eigen::Matrix2cd &y = pauli_matrix(Pauli::Y);
    const Eigen::Matrix2cd &z = pauli_matrix(Pauli::Z);
    CHECK(pauli_matrix(Pauli::I).isApprox(Eigen::Matrix2cd::Identity()));
    CHECK(x(0, 1) == Complex(1, 0));
    CHECK(x(1, 0) == Complex(1, 0));
    CHECK(y(0, 1) == Complex(0, -1));
    CHECK(y(1, 0) == Complex(0, 1));
    CHECK(z(0, 0) == Complex(1, 0));
    CHECK(z(1, 1) == Complex(-1, 0));

    // su(2) algebra: [X, Y] = 2iZ and cyclic.
    Eigen::Matrix2cd comm = x * y - y * x;
    CHECK(comm.isApprox(Complex(0, 2) * z, 1e-15));
    CHECK((y * z - z * y).isApprox(Complex(0, 2) * x, 1e-15));
    CHECK((z * x - x * z).isApprox(Complex(0, 2) * y, 1e-15));
}

TEST_CASE("PauliString parsing and forms") {
    PauliString p = PauliString::parse("IZXY");
    CHECK(p.size() == 4);
    CHECK(p.label(0) == Pauli::I);
    CHECK(p.label(1) == Pauli::Z);
    CHECK(p.label(2) == Pauli::X);
    CHECK(p.label(3) == Pauli::Y);
    CHECK(p.str() == "IZXY");
    CHECK(p.digits() == "0312");
    CHECK(PauliString::parse("0312") == p);
    CHECK(PauliString::parse("izxy") == p);
    CHECK(PauliString::parse(p.digits()) == p);
    CHECK(PauliString::identity(3).str() == "III");
    CHECK(PauliString::identity(3).is_identity());
    CHECK(!PauliString::parse("IZ").is_identity());

    CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::parse("IZQ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::parse("4"), std::invalid_argument);
}

TEST_CASE("PauliString enumeration is lexicographic and codes are unique") {
    auto all2 = PauliString::all(2);
    REQUIRE(all2.size() == 16);
    CHECK(all2.front().str() == "II");
    CHECK(all2[1].str() == "IX");
    CHECK(all2[4].str() == "XI");
    CHECK(all2.back().str() == "ZZ");
    for(size_t i = 1; i < all2.size(); ++i) CHECK(all2[i - 1] < all2[i]);

    std::unordered_set<PauliString> seen(all2.begin(), all2.end());
    CHECK(seen.size() == all2.size());

    CHECK(PauliString::parse("IZ").code() == 3);
    CHECK(PauliString::parse("ZI").code() == 12);
    CHECK(PauliString::all(3).size() == 64);
}

TEST_CASE("materialized strings: frozen small cases") {
    Matrix z = materialize_pauli(PauliString::parse("Z"), one_site).matrix();
    CHECK(z.isApprox((Matrix(2, 2) << 1, 0, 0, -1).finished()));

    Matrix zz = materialize_pauli(PauliString::parse("ZZ"), two_sites).matrix();
    Matrix zz_expected = Matrix::Zero(4, 4);
    zz_expected.diagonal() << 1, -1, -1, 1;
    CHECK(zz.isApprox(zz_expected));

    Matrix xy = materialize_pauli(PauliString::parse("XY"), two_sites).matrix();
    Matrix xy_expected = Matrix::Zero(4, 4);
    xy_expected(0, 3) = Complex(0, -1);
    xy_expected(1, 2) = Complex(0, 1);
    xy_expected(2, 1) = Complex(0, -1);
    xy_expected(3, 0) = Complex(0, 1);
    CHECK(xy.isApprox(xy_expected));

    CHECK_THROWS_AS(materialize_pauli(PauliString::parse("XY"), three_sites), std::invalid_argument);
    CHECK_THROWS_AS(materialize_pauli(PauliString::parse("X"), HilbertSpaceSpec{1, 3}), std::invalid_argument);
}

TEST_CASE("materialize agrees with explicit tensor fold") {
    std::vector<HermitianOperator> factors;
    for(Pauli p : {Pauli::X, Pauli::I, Pauli::Y})
        factors.emplace_back(Matrix(pauli_matrix(p)), one_site);
    HermitianOperator folded = tensor(factors);
    CHECK(folded.space() == three_sites);
    CHECK(folded.matrix().isApprox(materialize_pauli(PauliString::parse("XIY"), three_sites).matrix()));
    CHECK_THROWS_AS(tensor({}), std::invalid_argument);
}

TEST_CASE("hs_inner: Pauli strings are orthogonal with norm 2^m") {
    for(int m = 1; m <= 3; ++m) {
        HilbertSpaceSpec space{m, 2};
        auto strings = PauliString::all(m);
        std::vector<HermitianOperator> mats;
        mats.reserve(strings.size());
        for(const auto &s : strings) mats.push_back(materialize_pauli(s, space));
        const double norm = std::pow(2.0, m);
        for(size_t a = 0; a < mats.size(); ++a)
            for(size_t b = 0; b < mats.size(); ++b) {
                const double expected = (a == b) ? norm : 0.0;
                CHECK(hs_inner(mats[a], mats[b]) == doctest::Approx(expected).epsilon(1e-12));
            }
    }
}

TEST_CASE("hs_inner matches trace formula on random Hermitian pairs") {
    std::mt19937_64 rng(7);
    for(int trial = 0; trial < 10; ++trial) {
        HermitianOperator a(test::random_hermitian(8, rng), three_sites);
        HermitianOperator b(test::random_hermitian(8, rng), three_sites);
        const Complex tr = (a.matrix() * b.matrix()).trace();
        CHECK(std::abs(tr.imag()) < 1e-10);
        CHECK(hs_inner(a, b) == doctest::Approx(tr.real()).epsilon(1e-12));
    }
    HermitianOperator a(test::random_hermitian(4, rng), two_sites);
    HermitianOperator b(test::random_hermitian(8, rng), three_sites);
    CHECK_THROWS_AS(hs_inner(a, b), std::invalid_argument);
}

TEST_CASE("HermitianOperator construction guards") {
    Matrix bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(HermitianOperator(bad, one_site), std::invalid_argument);

    Matrix rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(HermitianOperator(rect, one_site), std::invalid_argument);

    Matrix wrong_dim = Matrix::Identity(4, 4);
    CHECK_THROWS_AS(HermitianOperator(wrong_dim, one_site), std::invalid_argument);

    // Tiny asymmetry under the scaled tolerance passes.
    Matrix almost = Matrix::Identity(2, 2);
    almost(0, 1) = Complex(0, 5e-13);
    almost(1, 0) = Complex(0, -5e-13 + 1e-16);
    CHECK_NOTHROW(HermitianOperator(almost, one_site));
}

TEST_CASE("DensityOperator validation") {
    CHECK_NOTHROW(DensityOperator(Matrix::Identity(4, 4) / 4.0, two_sites));
    CHECK_THROWS_AS(DensityOperator(Matrix::Identity(4, 4), two_sites), std::invalid_argument);

    Matrix indefinite = Matrix::Zero(2, 2);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityOperator(indefinite, one_site), std::invalid_argument);

    // -1e-10 eigenvalue floor: slightly negative but inside tolerance passes.
    Matrix borderline = Matrix::Zero(2, 2);
    borderline(0, 0) = 1.0 + 5e-11;
    borderline(1, 1) = -5e-11;
    CHECK_NOTHROW(DensityOperator(borderline, one_site));
}

TEST_CASE("pure_state normalizes and rejects zero") {
    Vector up(2);
    up << 1, 0;
    DensityOperator rho = pure_state(3.0 * up, one_site);
    CHECK(rho.matrix()(0, 0) == Complex(1, 0));
    CHECK(expectation(rho, materialize_pauli(PauliString::parse("Z"), one_site)) == doctest::Approx(1.0));

    Vector zero = Vector::Zero(2);
    CHECK_THROWS_AS(pure_state(zero, one_site), std::invalid_argument);
    Vector wrong(3);
    wrong << 1, 0, 0;
    CHECK_THROWS_AS(pure_state(wrong, one_site), std::invalid_argument);
}

TEST_CASE("expectation on Bell state") {
    Vector bell(4);
    bell << 1, 0, 0, 1; // (|00> + |11>)/sqrt(2) after normalization
    DensityOperator rho = pure_state(bell, two_sites);
    auto g = [&](const char *s) {
        return expectation(rho, materialize_pauli(PauliString::parse(s), two_sites));
    };
    CHECK(g("ZZ") == doctest::Approx(1.0));
    CHECK(g("XX") == doctest::Approx(1.0));
    CHECK(g("YY") == doctest::Approx(-1.0));
    CHECK(g("ZI") == doctest::Approx(0.0));
    CHECK(g("IZ") == doctest::Approx(0.0));
    CHECK(g("XY") == doctest::Approx(0.0));
}

TEST_CASE("partial trace of a product state gives the factors") {
    std::mt19937_64 rng(11);
    Matrix rho_a = test::random_density_matrix(2, rng);
    Matrix rho_b = test::random_density_matrix(2, rng);
    DensityOperator joint(kron(rho_a, rho_b), two_sites);
    CHECK(partial_trace(joint, {1}).matrix().isApprox(rho_a, 1e-12));
    CHECK(partial_trace(joint, {2}).matrix().isApprox(rho_b, 1e-12));
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
    Vector bell(4);
    bell << 1, 0, 0, 1;
    DensityOperator rho = pure_state(bell, two_sites);
    Matrix reduced = partial_trace(rho, {2}).matrix();
    CHECK(reduced.isApprox(Matrix::Identity(2, 2) / 2.0, 1e-12));
}

TEST_CASE("partial trace matches reference on random states") {
    std::mt19937_64 rng(13);
    const std::vector<std::vector<int>> keeps{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
    for(int trial = 0; trial < 5; ++trial) {
        DensityOperator rho(test::random_density_matrix(8, rng), three_sites);
        for(const auto &keep : keeps) {
            Matrix expected = test::partial_trace_reference(rho.matrix(), 3, 2, keep);
            CHECK(partial_trace(rho, keep).matrix().isApprox(expected, 1e-12));
        }
    }
}

TEST_CASE("partial trace keep-all and argument guards") {
    DensityOperator rho(Matrix::Identity(4, 4) / 4.0, two_sites);
    CHECK(partial_trace(rho, {1, 2}).matrix().isApprox(rho.matrix()));
    CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {0}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {3}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, {1, 1}), std::invalid_argument);
}

TEST_CASE("kron block structure") {
    Matrix a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 0, 1, 1, 0;
    Matrix k = kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(k(0, 1) == Complex(1, 0));
    CHECK(k(0, 3) == Complex(2, 0));
    CHECK(k(2, 1) == Complex(3, 0));
    CHECK(k(3, 2) == Complex(4, 0));
    CHECK(k(0, 0) == Complex(0, 0));
}
