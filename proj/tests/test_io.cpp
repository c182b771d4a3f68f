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

#include "symrec/io.hpp"

#include "symrec/errors.hpp"
#include "symrec/reconstruction.hpp"
#include "symrec/symmetry.hpp"
#include "test_util.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

using namespace symrec;
using nlohmann::json;

namespace {

std::filesystem::path test_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "symrec_io_tests";
        std::filesystem::remove_all(d);
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string temp_path(const std::string &name) { return (test_dir() / name).string(); }

std::string write_text(const std::string &name, const std::string &text) {
    const std::string path = temp_path(name);
    std::ofstream out(path);
    out << text;
    return path;
}

std::string read_text(const std::string &path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

const char *kZzSpecJson = R"({
  "version": "v1",
  "num_sites": 2,
  "local_dim": 2,
  "generators": [
    { "kind": "pauli_sum", "terms": [ { "string": "ZZ", "coefficient": 1.0 } ] }
  ]
})";

} // namespace

TEST_CASE("symmetry spec file with a pauli_sum generator loads") {
    const std::string path = write_text("zz_spec.json", kZzSpecJson);
    const SymmetrySpec spec = io::load_symmetry_spec(path);
    CHECK(spec.space().num_sites == 2);
    CHECK(spec.space().local_dim == 2);
    REQUIRE(spec.generators().size() == 1);
    CHECK(spec.discrete_elements().empty());
    const Matrix expected = materialize_pauli(PauliString::parse("ZZ"), spec.space()).matrix();
    CHECK((spec.generators()[0].matrix() - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(commutant(spec).dim() == 8);
}

TEST_CASE("symmetry spec file accepts dense and discrete operators") {
    json dense = json::array();
    const Matrix z = pauli_matrix(Pauli::Z);
    for(int r = 0; r < 2; ++r)
        for(int c = 0; c < 2; ++c) dense.push_back({z(r, c).real(), z(r, c).imag()});
    const json j{
        {"version", "v1"},
        {"num_sites", 1},
        {"local_dim", 2},
        {"generators", {{{"kind", "dense"}, {"matrix", {{"dim", 2}, {"entries", dense}}}}}},
        {"discrete_elements",
         {{{"kind", "pauli_string"}, {"string", "X"}},
          {{"kind", "dense"}, {"matrix", {{"dim", 2}, {"entries", dense}}}}}}};
    const std::string path = write_text("dense_spec.json", j.dump());
    const SymmetrySpec spec = io::load_symmetry_spec(path);
    REQUIRE(spec.generators().size() == 1);
    REQUIRE(spec.discrete_elements().size() == 2);
    CHECK((spec.discrete_elements()[0] - pauli_matrix(Pauli::X)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((spec.discrete_elements()[1] - z).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("missing generators and discrete_elements mean the trivial group") {
    const std::string path =
        write_text("trivial_spec.json", R"({"version":"v1","num_sites":1})");
    const SymmetrySpec spec = io::load_symmetry_spec(path);
    CHECK(spec.trivial());
    CHECK(spec.space().local_dim == 2);
}

TEST_CASE("spec files with bad structure are parse errors") {
    CHECK_THROWS_AS(io::load_symmetry_spec(temp_path("no_such_file.json")), parse_error);
    CHECK_THROWS_AS(io::load_symmetry_spec(write_text("garbage.json", "not json at all {")),
                    parse_error);
    CHECK_THROWS_AS(
        io::load_symmetry_spec(write_text("v2.json", R"({"version":"v2","num_sites":1})")),
        parse_error);
    CHECK_THROWS_AS(io::load_symmetry_spec(write_text("nover.json", R"({"num_sites":1})")),
                    parse_error);
    CHECK_THROWS_AS(
        io::load_symmetry_spec(write_text(
            "badkind.json",
            R"({"version":"v1","num_sites":1,"generators":[{"kind":"sparse"}]})")),
        parse_error);
    CHECK_THROWS_AS(
        io::load_symmetry_spec(write_text(
            "badletter.json",
            R"({"version":"v1","num_sites":1,"generators":[{"kind":"pauli_sum","terms":[{"string":"Q","coefficient":1}]}]})")),
        parse_error);
    CHECK_THROWS_AS(
        io::load_symmetry_spec(write_text(
            "badsites.json", R"({"version":"v1","num_sites":0})")),
        parse_error);
}

TEST_CASE("invalid operators inside a well-formed spec file are parse errors") {
    // Non-Hermitian dense generator.
    const char *non_hermitian = R"({
      "version": "v1", "num_sites": 1,
      "generators": [ { "kind": "dense",
        "matrix": { "dim": 2, "entries": [[0,0],[1,0],[0,0],[0,0]] } } ]
    })";
    CHECK_THROWS_AS(io::load_symmetry_spec(write_text("nonherm.json", non_hermitian)),
                    parse_error);

    // Non-unitary discrete element.
    const char *non_unitary = R"({
      "version": "v1", "num_sites": 1,
      "discrete_elements": [ { "kind": "dense",
        "matrix": { "dim": 2, "entries": [[2,0],[0,0],[0,0],[2,0]] } } ]
    })";
    CHECK_THROWS_AS(io::load_symmetry_spec(write_text("nonunit.json", non_unitary)), parse_error);

    // Dense matrix on the wrong dimension.
    const char *wrong_dim = R"({
      "version": "v1", "num_sites": 2,
      "generators": [ { "kind": "dense",
        "matrix": { "dim": 2, "entries": [[1,0],[0,0],[0,0],[1,0]] } } ]
    })";
    CHECK_THROWS_AS(io::load_symmetry_spec(write_text("wrongdim.json", wrong_dim)), parse_error);
}

TEST_CASE("parse_error carries the offending path as context") {
    const std::string path = write_text("ctx.json", "[1,2");
    try {
        io::load_symmetry_spec(path);
        FAIL("expected parse_error");
    } catch(const parse_error &e) {
        CHECK(e.context() == path);
        CHECK(std::string(e.what()).find(path) != std::string::npos);
    }
}

TEST_CASE("correlation files round trip exactly") {
    const HilbertSpaceSpec space{2, 2};
    CorrelationSet g(space);
    g.set(PauliString::parse("II"), 1.0);
    g.set(PauliString::parse("ZZ"), -0.123456789012345678);
    g.set(PauliString::parse("XX"), 1.0 / 3.0);
    io::save_correlations(g, temp_path("corr.json"));

    const CorrelationSet loaded = io::load_correlations(temp_path("corr.json"));
    CHECK(loaded.space() == space);
    REQUIRE(loaded.size() == 3);
    CHECK(loaded.at(PauliString::parse("ZZ")) == g.at(PauliString::parse("ZZ")));
    CHECK(loaded.at(PauliString::parse("XX")) == g.at(PauliString::parse("XX")));
    CHECK(loaded.at(PauliString::parse("II")) == 1.0);
}

TEST_CASE("correlation files accept digit keys and reject duplicates") {
    const char *digits = R"({
      "version": "v1", "num_sites": 2,
      "values": [ { "pauli": "33", "value": 0.5 } ]
    })";
    const CorrelationSet g = io::load_correlations(write_text("digits.json", digits));
    CHECK(g.at(PauliString::parse("ZZ")) == 0.5);

    const char *dup = R"({
      "version": "v1", "num_sites": 2,
      "values": [ { "pauli": "ZZ", "value": 0.5 }, { "pauli": "33", "value": 0.5 } ]
    })";
    CHECK_THROWS_AS(io::load_correlations(write_text("dup.json", dup)), parse_error);
}

TEST_CASE("correlation files with unphysical values are parse errors") {
    const char *big = R"({
      "version": "v1", "num_sites": 1,
      "values": [ { "pauli": "Z", "value": 1.5 } ]
    })";
    CHECK_THROWS_AS(io::load_correlations(write_text("big.json", big)), parse_error);

    const char *bad_identity = R"({
      "version": "v1", "num_sites": 1,
      "values": [ { "pauli": "I", "value": 0.5 } ]
    })";
    CHECK_THROWS_AS(io::load_correlations(write_text("badid.json", bad_identity)), parse_error);

    const char *wrong_len = R"({
      "version": "v1", "num_sites": 2,
      "values": [ { "pauli": "Z", "value": 0.5 } ]
    })";
    CHECK_THROWS_AS(io::load_correlations(write_text("wronglen.json", wrong_len)), parse_error);
}

TEST_CASE("correlation diagnostics survive a save and do not disturb loading") {
    const HilbertSpaceSpec space{1, 2};
    CorrelationSet g(space);
    g.set(PauliString::parse("Z"), 0.25);
    io::save_correlations(g, temp_path("diag.json"), {{"true_state_fidelity_after_reconstruction", 0.75}});

    const json j = json::parse(read_text(temp_path("diag.json")));
    CHECK(j.at("version") == "v1");
    CHECK(j.at("diagnostics").at("true_state_fidelity_after_reconstruction") == 0.75);
    CHECK(io::load_correlations(temp_path("diag.json")).at(PauliString::parse("Z")) == 0.25);
}

TEST_CASE("state files round trip bit for bit") {
    std::mt19937_64 rng(99);
    const HilbertSpaceSpec space{2, 2};
    const Matrix rho = test::random_density_matrix(4, rng);
    io::save_state(rho, space, temp_path("state.json"),
                   {{"trace", 1.0}, {"min_eigenvalue", 0.0}});

    const DensityOperator loaded = io::load_state(temp_path("state.json"));
    CHECK(loaded.space() == space);
    CHECK((loaded.matrix() - rho).cwiseAbs().maxCoeff() == 0.0);

    const json j = json::parse(read_text(temp_path("state.json")));
    CHECK(j.at("diagnostics").at("trace") == 1.0);
    CHECK(j.at("matrix").at("dim") == 4);
}

TEST_CASE("state files that fail density validation are parse errors") {
    const HilbertSpaceSpec space{1, 2};
    io::save_state(2.0 * Matrix::Identity(2, 2), space, temp_path("trace2.json"));
    CHECK_THROWS_AS(io::load_state(temp_path("trace2.json")), parse_error);

    Matrix neg(2, 2);
    neg << 2.0, 0.0, 0.0, -1.0;
    io::save_state(neg, space, temp_path("neg.json"));
    CHECK_THROWS_AS(io::load_state(temp_path("neg.json")), parse_error);
}

TEST_CASE("save_state rejects a matrix on the wrong space") {
    CHECK_THROWS_AS(
        io::save_state(Matrix::Identity(2, 2), HilbertSpaceSpec{2, 2}, temp_path("bad.json")),
        std::invalid_argument);
}

TEST_CASE("mcso basis files carry the dimension and both bases") {
    const SymmetrySpec spec = io::load_symmetry_spec(write_text("zz2.json", kZzSpecJson));
    const ObservableSubspace subspace = commutant(spec);
    io::save_mcso_basis(subspace, minimal_reconstruction_basis(subspace), temp_path("mcso.json"));

    const json j = json::parse(read_text(temp_path("mcso.json")));
    CHECK(j.at("version") == "v1");
    CHECK(j.at("num_sites") == 2);
    CHECK(j.at("mcso_dim") == 8);
    REQUIRE(j.at("orthonormal_basis").size() == 8);
    CHECK(j.at("orthonormal_basis")[0].at("dim") == 4);
    CHECK(j.at("orthonormal_basis")[0].at("entries").size() == 16);
    const std::vector<std::string> labels = j.at("minimal_basis");
    CHECK(labels == std::vector<std::string>{"II", "IZ", "XX", "XY", "YX", "YY", "ZI", "ZZ"});
}

TEST_CASE("matrix entries parse back to the exact doubles that were stored") {
    // A value with no short decimal form must survive the trip unchanged.
    const double awkward = 0.1 + 0.2;
    Matrix m(2, 2);
    m << Complex(awkward, 0), Complex(1e-17, 0.3), Complex(1e-17, -0.3),
        Complex(1.0 - awkward, 0);
    const HilbertSpaceSpec space{1, 2};
    io::save_state(m, space, temp_path("awkward.json"));
    const Matrix back = io::load_state(temp_path("awkward.json")).matrix();
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}
