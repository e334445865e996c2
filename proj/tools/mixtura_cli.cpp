// Copyright 2026 The Mixtura Authors
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

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mixtura/decompositions.hpp"
#include "mixtura/errors.hpp"
#include "mixtura/report.hpp"
#include "mixtura/scenarios.hpp"
#include "mixtura/selftest.hpp"
#include "mixtura/statefile.hpp"

namespace {

using namespace mixtura;

struct RunConfig {
    Tolerance tolerance;
    double schmidt_cutoff = kDefaultSchmidtCutoff;
    OutputFormat format = OutputFormat::Text;
    uint64_t seed = 0;
};

BipartiteDims parse_dims(const std::string &spec) {
    size_t x = spec.find('x');
    if (x == std::string::npos) {
        throw CLI::ValidationError("--dims", "expected the form AxB");
    }
    try {
        return BipartiteDims{std::stoll(spec.substr(0, x)),
                             std::stoll(spec.substr(x + 1))};
    } catch (const std::exception &) {
        throw CLI::ValidationError("--dims", "expected the form AxB");
    }
}

std::vector<Complex> pair_up(const std::vector<double> &flat) {
    if (flat.size() % 2 != 0) {
        throw CLI::ValidationError("--amps",
                                   "expected flat re,im pairs (even count)");
    }
    std::vector<Complex> out;
    for (size_t i = 0; i < flat.size(); i += 2) {
        out.emplace_back(flat[i], flat[i + 1]);
    }
    return out;
}

void print_kets(const std::string &name, const std::vector<Ket> &kets,
                const RunConfig &cfg) {
    for (size_t s = 0; s < kets.size(); ++s) {
        std::cout << render_matrix(name + "_" + std::to_string(s),
                                   kets[s].amps(), cfg.format);
    }
}

int cmd_selftest(const RunConfig &cfg) {
    auto results = run_selftest(cfg.seed);
    bool all_passed = true;
    for (const auto &r : results) {
        std::printf("suite %-28s %s trials=%d worst=%.3g%s%s\n",
                    r.name.c_str(), r.passed ? "PASS" : "FAIL", r.trials,
                    r.worst_residual, r.detail.empty() ? "" : " detail=",
                    r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Constructive quantum mixtures: partial trace, Schmidt "
                 "decomposition, purification and ensemble steering"};
    app.require_subcommand(1);
    app.fallthrough(true);

    RunConfig cfg;
    if (const char *env = std::getenv("MIXTURA_TOL")) {
        char *end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) {
            cfg.tolerance.abs = cfg.tolerance.rel = v;
        }
    }

    double tol_flag = -1.0;
    std::string format_name = "text";
    app.add_option("--tol", tol_flag,
                   "absolute and relative tolerance (overrides MIXTURA_TOL)");
    app.add_option("--cutoff", cfg.schmidt_cutoff,
                   "Schmidt coefficient cutoff")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized demos");
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string file, ensemble_file, psi_file, phi_file, dims_spec, keep = "A";
    std::vector<double> a_weights, b_weights, flat_amps;

    auto *ptrace_cmd = app.add_subcommand("ptrace", "partial trace");
    ptrace_cmd->add_option("--file", file)->required();
    ptrace_cmd->add_option("--dims", dims_spec)->required();
    ptrace_cmd->add_option("--keep", keep)->check(CLI::IsMember({"A", "B"}));

    auto *purity_cmd = app.add_subcommand("purity", "Tr(rho^2)");
    purity_cmd->add_option("--file", file)->required();

    auto *mix_cmd =
        app.add_subcommand("mix", "convex mixture of an ensemble");
    mix_cmd->add_option("--file", file)->required();

    auto *schmidt_cmd =
        app.add_subcommand("schmidt", "Schmidt decomposition");
    schmidt_cmd->add_option("--file", file)->required();
    schmidt_cmd->add_option("--dims", dims_spec)->required();

    auto *purify_cmd = app.add_subcommand("purify", "minimal purification");
    purify_cmd->add_option("--file", file)->required();

    auto *ghjw_cmd = app.add_subcommand(
        "ghjw", "steer a purification into a target decomposition");
    ghjw_cmd->add_option("--file", file)->required();
    ghjw_cmd->add_option("--dims", dims_spec)->required();
    ghjw_cmd->add_option("--ensemble", ensemble_file)->required();

    auto *lemma_cmd = app.add_subcommand(
        "lemma-unitary", "B-side unitary connecting equal-marginal states");
    lemma_cmd->add_option("--psi", psi_file)->required();
    lemma_cmd->add_option("--phi", phi_file)->required();
    lemma_cmd->add_option("--dims", dims_spec)->required();

    auto *scenario_cmd = app.add_subcommand("scenario", "mixture scenarios");
    scenario_cmd->require_subcommand(1);

    auto *despagnat_cmd = scenario_cmd->add_subcommand(
        "despagnat", "composite-reconstruction demonstration");
    despagnat_cmd->add_option("--a", a_weights)->required()->delimiter(',');
    despagnat_cmd->add_option("--b", b_weights)->required()->delimiter(',');
    despagnat_cmd->add_option(
        "--psi", psi_file,
        "ket file with the joint coefficients (default: Schmidt diagonal)");

    auto *preparation_cmd = scenario_cmd->add_subcommand(
        "preparation", "classify what a preparation produces");
    preparation_cmd->add_option("--file", file)->required();

    auto *premeasure_cmd = scenario_cmd->add_subcommand(
        "premeasure", "trace out the pointer after premeasurement");
    premeasure_cmd->add_option("--amps", flat_amps,
                               "system amplitudes as flat re,im pairs")
        ->required()
        ->delimiter(',');

    auto *selftest_cmd = app.add_subcommand(
        "selftest", "run the randomized verification suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (tol_flag > 0) {
        cfg.tolerance.abs = cfg.tolerance.rel = tol_flag;
    }
    cfg.format = format_name == "machine" ? OutputFormat::Machine
                                          : OutputFormat::Text;
    const Tolerance &tol = cfg.tolerance;

    try {
        if (ptrace_cmd->parsed()) {
            BipartiteDims dims = parse_dims(dims_spec);
            StateFile sf = read_state_file(file);
            DensityOperator rho = sf.kind == StateKind::Ket
                                      ? projector(to_ket(sf))
                                      : to_density(sf, tol);
            auto reduced = partial_trace(
                rho, dims, keep == "A" ? Keep::A : Keep::B, tol);
            std::cout << render_matrix("rho_" + keep, reduced.matrix(),
                                       cfg.format);
        } else if (purity_cmd->parsed()) {
            StateFile sf = read_state_file(file);
            DensityOperator rho = sf.kind == StateKind::Ket
                                      ? projector(to_ket(sf))
                                      : to_density(sf, tol);
            std::cout << "purity="
                      << format_scalar(purity(rho), cfg.format) << "\n";
        } else if (mix_cmd->parsed()) {
            Ensemble e = to_ensemble(read_state_file(file), tol);
            std::cout << render_matrix("rho", convex_mix(e, tol).matrix(),
                                       cfg.format);
        } else if (schmidt_cmd->parsed()) {
            BipartiteDims dims = parse_dims(dims_spec);
            Ket psi = to_ket(read_state_file(file));
            SchmidtDecomposition sd =
                schmidt(psi, dims, cfg.schmidt_cutoff, tol);
            std::cout << "rank=" << sd.rank() << "\n";
            for (Index s = 0; s < sd.rank(); ++s) {
                std::cout << "coeff_" << s << "="
                          << format_scalar(sd.coeffs(s), cfg.format) << "\n";
            }
            print_kets("left", sd.left, cfg);
            print_kets("right", sd.right, cfg);
        } else if (purify_cmd->parsed()) {
            DensityOperator rho = to_density(read_state_file(file), tol);
            Purification pure = purify(rho, tol);
            std::cout << "dims=" << pure.dims.dimA << "x" << pure.dims.dimB
                      << "\n";
            std::cout << render_matrix("psi", pure.psi.amps(), cfg.format);
        } else if (ghjw_cmd->parsed()) {
            BipartiteDims dims = parse_dims(dims_spec);
            Ket psi = to_ket(read_state_file(file));
            Ensemble target = to_ensemble(read_state_file(ensemble_file), tol);
            SteeringResult steered = ghjw_steer(psi, dims, target, tol);
            std::cout << "reconstruction_error="
                      << format_scalar(steered.reconstruction_error,
                                       cfg.format)
                      << "\n";
            print_kets("c", steered.ancilla_basis, cfg);
            std::cout << render_matrix("U", steered.unitary, cfg.format);
        } else if (lemma_cmd->parsed()) {
            BipartiteDims dims = parse_dims(dims_spec);
            Ket psi = to_ket(read_state_file(psi_file));
            Ket phi = to_ket(read_state_file(phi_file));
            Matrix u = lemma_unitary(psi, phi, dims, tol);
            Matrix eye = Matrix::Identity(dims.dimB, dims.dimB);
            std::cout << "unitarity_residual="
                      << format_scalar((u.adjoint() * u - eye).norm(),
                                       cfg.format)
                      << "\n";
            std::cout << render_matrix("U", u, cfg.format);
        } else if (despagnat_cmd->parsed()) {
            std::vector<Ket> u_basis, v_basis;
            for (size_t j = 0; j < a_weights.size(); ++j) {
                u_basis.push_back(Ket::standard_basis(
                    static_cast<Index>(a_weights.size()),
                    static_cast<Index>(j)));
            }
            for (size_t k = 0; k < b_weights.size(); ++k) {
                v_basis.push_back(Ket::standard_basis(
                    static_cast<Index>(b_weights.size()),
                    static_cast<Index>(k)));
            }
            Matrix coeffs;
            if (!psi_file.empty()) {
                Ket psi = to_ket(read_state_file(psi_file));
                if (psi.dim() != static_cast<Index>(a_weights.size() *
                                                    b_weights.size())) {
                    throw DimensionMismatch(
                        "--psi ket must have dimension |a|*|b|");
                }
                coeffs.resize(static_cast<Index>(a_weights.size()),
                              static_cast<Index>(b_weights.size()));
                for (Index j = 0; j < coeffs.rows(); ++j) {
                    for (Index k = 0; k < coeffs.cols(); ++k) {
                        coeffs(j, k) = psi.amps()(j * coeffs.cols() + k);
                    }
                }
            } else {
                if (a_weights != b_weights) {
                    throw MarginalMismatch(
                        "the default Schmidt-diagonal coefficients require "
                        "--a and --b to coincide; pass --psi explicitly");
                }
                coeffs = schmidt_diagonal_coefficients(a_weights);
            }
            ScenarioReport report = despagnat_scenario(
                u_basis, v_basis, a_weights, b_weights, coeffs, tol);
            std::cout << render_report(report, cfg.format);
        } else if (preparation_cmd->parsed()) {
            PreparationModel model = to_preparation(read_state_file(file));
            std::cout << render_report(prepare_with_environment(model, tol),
                                       cfg.format);
        } else if (premeasure_cmd->parsed()) {
            std::vector<Complex> amps = pair_up(flat_amps);
            std::vector<Ket> pointer;
            for (size_t s = 0; s < amps.size(); ++s) {
                pointer.push_back(Ket::standard_basis(
                    static_cast<Index>(amps.size()),
                    static_cast<Index>(s)));
            }
            std::cout << render_report(premeasurement(amps, pointer, tol),
                                       cfg.format);
        } else if (selftest_cmd->parsed()) {
            return cmd_selftest(cfg);
        }
    } catch (const SyntaxError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
