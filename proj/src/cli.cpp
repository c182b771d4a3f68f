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

#include "symrec/cli.hpp"

#include "symrec/errors.hpp"
#include "symrec/io.hpp"
#include "symrec/models.hpp"
#include "symrec/reconstruction.hpp"
#include "symrec/simulate.hpp"
#include "symrec/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace symrec::cli {
namespace {

struct McsoOptions {
    std::string spec_path;
    std::string out_path;
};

struct ReconstructOptions {
    std::string spec_path;
    std::string correlations_path;
    std::string out_path;
    bool psd = false;
};

struct SimulateOptions {
    std::string spec_path;
    long shots = 1;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string state_path;
    std::string state_out_path;
};

struct DemoOptions {
    int sites = 2;
    double coupling = 1.0;
    double field = 0.0;
    bool periodic = false;
    std::string alpha_text;
    std::string beta_text;
    double thermal_beta = 0.0;
    bool thermal = false;
};

/// Accepts "0.6", "-1.5", or the stream form "(re,im)".
Complex parse_complex(const std::string &text, const std::string &option) {
    std::istringstream in(text);
    Complex z;
    in >> z;
    if(!in.fail()) {
        char leftover;
        if(!(in >> leftover)) return z;
    }
    throw CLI::ValidationError(option, "expected a real number or (re,im), got \"" + text + "\"");
}

PauliString single_site(Pauli p, int site, int num_sites) {
    std::vector<Pauli> labels(num_sites, Pauli::I);
    labels[site - 1] = p;
    return PauliString(std::move(labels));
}

PauliString all_sites(Pauli p, int num_sites) {
    return PauliString(std::vector<Pauli>(num_sites, p));
}

/// Generator sum_j sigma_z^j of the global phase rotations.
SymmetrySpec total_sigma_z_spec(const HilbertSpaceSpec &space) {
    std::vector<std::pair<PauliString, double>> terms;
    for(int j = 1; j <= space.num_sites; ++j)
        terms.emplace_back(single_site(Pauli::Z, j, space.num_sites), 1.0);
    return SymmetrySpec(space, {pauli_sum(terms, space)});
}

/// The spin-flip parity string (x)_j sigma_z^j as a discrete element.
SymmetrySpec parity_spec(const HilbertSpaceSpec &space) {
    return SymmetrySpec(space, {},
                        {materialize_pauli(all_sites(Pauli::Z, space.num_sites), space).matrix()});
}

double min_eigenvalue(const Matrix &m) {
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(((m + m.adjoint()) / 2.0).eval(),
                                                    Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff();
}

void cmd_mcso(const McsoOptions &opts, std::ostream &out) {
    const SymmetrySpec spec = io::load_symmetry_spec(opts.spec_path);
    const ObservableSubspace subspace = commutant(spec);
    const std::vector<PauliString> minimal = minimal_reconstruction_basis(subspace);
    out << "dim=" << subspace.dim() << ", minimal basis size=" << minimal.size()
        << ", minimal basis:";
    for(const PauliString &p : minimal) out << ' ' << p.str();
    out << '\n';
    if(!opts.out_path.empty()) io::save_mcso_basis(subspace, minimal, opts.out_path);
}

void cmd_report(const std::string &spec_path, std::ostream &out) {
    const SymmetrySpec spec = io::load_symmetry_spec(spec_path);
    const ReductionReport report = reduction_report(spec);
    const nlohmann::json j{{"full_count", report.full_count},
                           {"mcso_dim", report.mcso_dim},
                           {"minimal_basis_size", report.minimal_basis_size},
                           {"reduction_factor", report.reduction_factor}};
    out << j.dump(2) << '\n';
}

void cmd_reconstruct(const ReconstructOptions &opts, std::ostream &out, std::ostream &err) {
    const SymmetrySpec spec = io::load_symmetry_spec(opts.spec_path);
    const CorrelationSet g = io::load_correlations(opts.correlations_path);
    if(!(g.space() == spec.space()))
        throw std::invalid_argument("correlation file does not match the spec's space");

    const ReconstructionMap map = build_reconstruction_map(commutant(spec));
    std::vector<PauliString> ignored;
    const HermitianOperator raw = reconstruct(map, g, &ignored);
    for(const PauliString &p : ignored)
        err << "warning: correlation " << p.str() << " lies outside the minimal basis; ignored\n";

    Matrix result = raw.matrix();
    const double raw_min_eig = min_eigenvalue(result);
    if(opts.psd) {
        result = psd_repair(raw).matrix();
    } else if(raw_min_eig < -1e-9) {
        err << "warning: reconstruction has min eigenvalue " << raw_min_eig
            << "; rerun with --psd to project onto physical states\n";
    }

    const double hermiticity_residual = (result - result.adjoint()).cwiseAbs().maxCoeff();
    const double min_eig = min_eigenvalue(result);
    const double trace = result.trace().real();
    io::save_state(result, spec.space(), opts.out_path,
                   {{"hermiticity_residual", hermiticity_residual},
                    {"min_eigenvalue", min_eig},
                    {"trace", trace}});
    out << "reconstructed " << result.rows() << "x" << result.cols() << " state from " << map.size()
        << " correlations: trace=" << trace << ", min_eigenvalue=" << min_eig << '\n';
}

void cmd_simulate(const SimulateOptions &opts, std::ostream &out) {
    const SymmetrySpec spec = io::load_symmetry_spec(opts.spec_path);
    const ObservableSubspace subspace = commutant(spec);
    const ReconstructionMap map = build_reconstruction_map(subspace);

    const DensityOperator truth = opts.state_path.empty()
                                      ? random_symmetric_state(subspace, opts.seed)
                                      : io::load_state(opts.state_path);
    if(!(truth.space() == spec.space()))
        throw std::invalid_argument("state file does not match the spec's space");

    const CorrelationSet g = sample_correlations(truth, map.keys(), {opts.shots, opts.seed});
    const DensityOperator repaired = psd_repair(reconstruct(map, g));
    const double fid = fidelity(truth, repaired);

    io::save_correlations(g, opts.out_path, {{"true_state_fidelity_after_reconstruction", fid}});
    if(!opts.state_out_path.empty())
        io::save_state(truth.matrix(), truth.space(), opts.state_out_path);
    out << "sampled " << map.size() << " strings at " << opts.shots
        << " shots each; true_state_fidelity_after_reconstruction=" << fid << '\n';
}

void cmd_demo(const DemoOptions &opts, std::ostream &out) {
    const int m = opts.sites;
    const HilbertSpaceSpec space{m, 2};
    const HermitianOperator h =
        ising_hamiltonian({m, opts.coupling, opts.field, opts.periodic});

    const bool cat_mode = !opts.alpha_text.empty();
    DensityOperator state = [&] {
        if(opts.thermal) return thermal_state(h, opts.thermal_beta);
        if(cat_mode) {
            Complex alpha = parse_complex(opts.alpha_text, "--alpha");
            Complex beta = parse_complex(opts.beta_text, "--beta");
            const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
            if(norm < 1e-12)
                throw CLI::ValidationError("--alpha", "alpha and beta cannot both vanish");
            alpha /= norm;
            beta /= norm;
            return cat_state({alpha, beta, m});
        }
        return ground_state(h);
    }();

    out << "model: Ising chain, m=" << m << ", J=" << opts.coupling << ", g=" << opts.field
        << (opts.periodic ? ", periodic" : ", open") << '\n';
    if(opts.thermal)
        out << "state: thermal, beta=" << opts.thermal_beta << '\n';
    else if(cat_mode)
        out << "state: cat superposition of the all-up and all-down levels\n";
    else
        out << "state: ground state\n";

    const SymmetryCheck u1 = is_symmetric(state, total_sigma_z_spec(space));
    const SymmetryCheck parity = is_symmetric(state, parity_spec(space));
    out << "symmetric under total sigma_z rotations: " << (u1 ? "yes" : "no") << '\n';
    out << "symmetric under the parity string: " << (parity ? "yes" : "no") << '\n';

    const DensityOperator reduced = m == 2 ? state : partial_trace(state, {1, 2});
    const HilbertSpaceSpec two{2, 2};
    const SymmetrySpec zz(two, {pauli_sum({{PauliString::parse("ZZ"), 1.0}}, two)});
    const std::vector<PauliString> basis = minimal_reconstruction_basis(commutant(zz));
    const CorrelationSet g = correlations_of(reduced, basis);
    out << "two-site correlations:";
    for(const auto &[p, value] : g.values()) out << ' ' << p.str() << '=' << value;
    out << '\n';

    const Vertex8Parameters v = vertex8_from_correlations(g);
    out << "vertex parameters: r1=" << v.r1 << " r2=" << v.r2 << " r3=" << v.r3 << " r4=" << v.r4
        << " z1=" << v.z1 << " z2=" << v.z2 << '\n';
    out << "parameters form a physical state: " << (v.psd_ok() ? "yes" : "no") << '\n';
    if(cat_mode)
        out << "recovered |alpha|^2=" << v.r1 << ", |beta|^2=" << v.r2 << '\n';

    if(m >= 3) {
        const HilbertSpaceSpec rest{m - 2, 2};
        try {
            const bool ok = check_lemma1(state, parity_spec(two), parity_spec(rest), 2);
            out << "lemma 1 (parity x parity survives the partial trace): "
                << (ok ? "pass" : "FAIL") << '\n';
        } catch(const std::invalid_argument &e) {
            out << "lemma 1: skipped (" << e.what() << ")\n";
        }

        // Lemma 2 needs a pure state; tr(rho^2) = 1 identifies one.
        const double purity = (state.matrix() * state.matrix()).trace().real();
        if(purity > 1.0 - 1e-10) {
            const Eigen::SelfAdjointEigenSolver<Matrix> eig(state.matrix());
            Eigen::Index top;
            eig.eigenvalues().maxCoeff(&top);
            const Vector psi = eig.eigenvectors().col(top);
            try {
                const bool ok = check_lemma2(psi, materialize_pauli(all_sites(Pauli::Z, 2), two),
                                             materialize_pauli(all_sites(Pauli::Z, m - 2), rest));
                out << "lemma 2 (eigenvector reduction stays symmetric): " << (ok ? "pass" : "FAIL")
                    << '\n';
            } catch(const std::invalid_argument &e) {
                out << "lemma 2: skipped (" << e.what() << ")\n";
            }
        } else {
            out << "lemma 2: skipped (state is mixed, purity=" << purity << ")\n";
        }
    } else {
        out << "lemma checks: skipped (need at least 3 sites for a 2+rest split)\n";
    }

    const bool diagonal = std::max(std::abs(v.z1), std::abs(v.z2)) < 1e-9;
    out << "reduced state class: " << (std::abs(v.z1) < 1e-9 ? "6-vertex" : "8-vertex")
        << (diagonal ? " (diagonal)" : "") << '\n';
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"state reconstruction from symmetry-reduced correlation sets"};
    app.name("symrec");
    app.require_subcommand(1);

    McsoOptions mcso_opts;
    CLI::App *mcso = app.add_subcommand("mcso", "compute the symmetric operator space and its "
                                                "minimal measurement basis");
    mcso->add_option("--spec", mcso_opts.spec_path, "symmetry spec file")->required();
    mcso->add_option("--out", mcso_opts.out_path, "write the basis to this file");

    ReconstructOptions rec_opts;
    CLI::App *rec = app.add_subcommand("reconstruct", "rebuild a state from measured correlations");
    rec->add_option("--spec", rec_opts.spec_path, "symmetry spec file")->required();
    rec->add_option("--correlations", rec_opts.correlations_path, "correlation file")->required();
    rec->add_option("--out", rec_opts.out_path, "write the state to this file")->required();
    rec->add_flag("--psd", rec_opts.psd, "project the result onto physical states");

    SimulateOptions sim_opts;
    CLI::App *sim = app.add_subcommand("simulate", "sample finite-shot correlations of a "
                                                   "symmetric state");
    sim->add_option("--spec", sim_opts.spec_path, "symmetry spec file")->required();
    sim->add_option("--shots", sim_opts.shots, "shots per Pauli string")
        ->required()
        ->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_opts.seed, "RNG seed")->capture_default_str();
    sim->add_option("--out", sim_opts.out_path, "write sampled correlations to this file")
        ->required();
    sim->add_option("--state", sim_opts.state_path, "measure this state instead of a random one");
    sim->add_option("--state-out", sim_opts.state_out_path, "save the measured state");

    std::string report_spec_path;
    CLI::App *report = app.add_subcommand("report", "print the measurement reduction numbers");
    report->add_option("--spec", report_spec_path, "symmetry spec file")->required();

    DemoOptions demo_opts;
    CLI::App *demo = app.add_subcommand("demo", "worked examples");
    demo->require_subcommand(1);
    CLI::App *ising = demo->add_subcommand("ising", "Ising chain states and their two-site "
                                                    "vertex form");
    ising->add_option("--sites", demo_opts.sites, "chain length")
        ->capture_default_str()
        ->check(CLI::Range(2, 6));
    ising->add_option("--J", demo_opts.coupling, "ferromagnetic coupling")->capture_default_str();
    ising->add_option("--g", demo_opts.field, "longitudinal field")->capture_default_str();
    ising->add_flag("--periodic", demo_opts.periodic, "close the chain into a ring");
    CLI::Option *alpha =
        ising->add_option("--alpha", demo_opts.alpha_text, "cat amplitude on |up...up>");
    CLI::Option *beta =
        ising->add_option("--beta", demo_opts.beta_text, "cat amplitude on |down...down>");
    CLI::Option *thermal = ising->add_option("--thermal", demo_opts.thermal_beta,
                                             "inverse temperature of a thermal state");
    alpha->needs(beta);
    beta->needs(alpha);
    thermal->excludes(alpha)->excludes(beta);

    mcso->callback([&] { cmd_mcso(mcso_opts, out); });
    rec->callback([&] { cmd_reconstruct(rec_opts, out, err); });
    sim->callback([&] { cmd_simulate(sim_opts, out); });
    report->callback([&] { cmd_report(report_spec_path, out); });
    ising->callback([&] {
        demo_opts.thermal = thermal->count() > 0;
        if(!demo_opts.alpha_text.empty() && demo_opts.sites % 2 != 0)
            throw CLI::ValidationError("--sites", "the cat state needs an even number of sites");
        cmd_demo(demo_opts, out);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
        return 0;
    } catch(const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch(const parse_error &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch(const missing_data_error &e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch(const numerical_error &e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch(const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch(const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace symrec::cli
