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

#include <json.hpp>

#include <fstream>
#include <utility>

namespace symrec::io {
namespace {

using nlohmann::json;

json matrix_to_json(const Matrix &m) {
    json entries = json::array();
    for(Eigen::Index r = 0; r < m.rows(); ++r)
        for(Eigen::Index c = 0; c < m.cols(); ++c)
            entries.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    return json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json &j) {
    const auto dim = j.at("dim").get<Eigen::Index>();
    if(dim < 1) throw std::invalid_argument("matrix dim must be positive");
    const json &entries = j.at("entries");
    if(!entries.is_array() || entries.size() != static_cast<std::size_t>(dim * dim))
        throw std::invalid_argument("matrix entries must hold dim^2 [re, im] pairs");
    Matrix m(dim, dim);
    std::size_t k = 0;
    for(Eigen::Index r = 0; r < dim; ++r) {
        for(Eigen::Index c = 0; c < dim; ++c, ++k) {
            const json &e = entries[k];
            if(!e.is_array() || e.size() != 2)
                throw std::invalid_argument("matrix entry must be a [re, im] pair");
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

json parse_file(const std::string &path) {
    std::ifstream in(path);
    if(!in) throw parse_error(path, "cannot open file");
    try {
        return json::parse(in);
    } catch(const json::exception &e) {
        throw parse_error(path, e.what());
    }
}

void require_version(const json &j, const std::string &path) {
    if(j.value("version", std::string{}) != kFileVersion)
        throw parse_error(path, std::string("expected \"version\": \"") + kFileVersion + "\"");
}

HilbertSpaceSpec space_from_json(const json &j) {
    HilbertSpaceSpec space{j.at("num_sites").get<int>(), j.value("local_dim", 2)};
    validate_space(space);
    return space;
}

void write_file(const json &j, const std::string &path) {
    std::ofstream out(path);
    if(!out) throw parse_error(path, "cannot open file for writing");
    out << j.dump(2) << '\n';
    if(!out) throw parse_error(path, "write failed");
}

json space_header(const HilbertSpaceSpec &space) {
    return json{{"version", kFileVersion},
                {"num_sites", space.num_sites},
                {"local_dim", space.local_dim}};
}

} // namespace

SymmetrySpec load_symmetry_spec(const std::string &path) {
    const json j = parse_file(path);
    try {
        require_version(j, path);
        const HilbertSpaceSpec space = space_from_json(j);

        std::vector<HermitianOperator> generators;
        for(const json &g : j.value("generators", json::array())) {
            const auto kind = g.at("kind").get<std::string>();
            if(kind == "pauli_sum") {
                std::vector<std::pair<PauliString, double>> terms;
                for(const json &t : g.at("terms"))
                    terms.emplace_back(PauliString::parse(t.at("string").get<std::string>()),
                                       t.at("coefficient").get<double>());
                generators.push_back(pauli_sum(terms, space));
            } else if(kind == "dense") {
                generators.emplace_back(matrix_from_json(g.at("matrix")), space);
            } else {
                throw std::invalid_argument("unknown generator kind \"" + kind + "\"");
            }
        }

        std::vector<Matrix> discrete;
        for(const json &u : j.value("discrete_elements", json::array())) {
            const auto kind = u.at("kind").get<std::string>();
            if(kind == "pauli_string") {
                discrete.push_back(
                    materialize_pauli(PauliString::parse(u.at("string").get<std::string>()), space)
                        .matrix());
            } else if(kind == "dense") {
                discrete.push_back(matrix_from_json(u.at("matrix")));
            } else {
                throw std::invalid_argument("unknown discrete element kind \"" + kind + "\"");
            }
        }

        return SymmetrySpec(space, std::move(generators), std::move(discrete));
    } catch(const json::exception &e) {
        throw parse_error(path, e.what());
    } catch(const std::invalid_argument &e) {
        throw parse_error(path, e.what());
    }
}

CorrelationSet load_correlations(const std::string &path) {
    const json j = parse_file(path);
    try {
        require_version(j, path);
        const HilbertSpaceSpec space = space_from_json(j);
        CorrelationSet g(space);
        for(const json &v : j.at("values")) {
            const PauliString p = PauliString::parse(v.at("pauli").get<std::string>());
            if(g.contains(p))
                throw std::invalid_argument("duplicate correlation key " + p.str());
            g.set(p, v.at("value").get<double>());
        }
        return g;
    } catch(const json::exception &e) {
        throw parse_error(path, e.what());
    } catch(const std::invalid_argument &e) {
        throw parse_error(path, e.what());
    }
}

DensityOperator load_state(const std::string &path) {
    const json j = parse_file(path);
    try {
        require_version(j, path);
        const HilbertSpaceSpec space = space_from_json(j);
        return DensityOperator(matrix_from_json(j.at("matrix")), space);
    } catch(const json::exception &e) {
        throw parse_error(path, e.what());
    } catch(const std::invalid_argument &e) {
        throw parse_error(path, e.what());
    }
}

void save_correlations(const CorrelationSet &g, const std::string &path,
                       const std::map<std::string, double> &diagnostics) {
    json values = json::array();
    for(const auto &[p, value] : g.values())
        values.push_back(json{{"pauli", p.str()}, {"value", value}});
    json j = space_header(g.space());
    j["values"] = std::move(values);
    if(!diagnostics.empty()) j["diagnostics"] = diagnostics;
    write_file(j, path);
}

void save_state(const Matrix &rho, const HilbertSpaceSpec &space, const std::string &path,
                const std::map<std::string, double> &diagnostics) {
    if(rho.rows() != space.dim() || rho.cols() != space.dim())
        throw std::invalid_argument("state matrix does not match the stated space");
    json j = space_header(space);
    j["matrix"] = matrix_to_json(rho);
    if(!diagnostics.empty()) j["diagnostics"] = diagnostics;
    write_file(j, path);
}

void save_mcso_basis(const ObservableSubspace &subspace,
                     const std::vector<PauliString> &minimal_basis, const std::string &path) {
    json basis = json::array();
    for(const HermitianOperator &b : subspace.basis()) basis.push_back(matrix_to_json(b.matrix()));
    json minimal = json::array();
    for(const PauliString &p : minimal_basis) minimal.push_back(p.str());
    json j = space_header(subspace.space());
    j["mcso_dim"] = subspace.dim();
    j["orthonormal_basis"] = std::move(basis);
    j["minimal_basis"] = std::move(minimal);
    write_file(j, path);
}

} // namespace symrec::io
