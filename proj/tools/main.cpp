// Copyright 2026 The fqc developers.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqc/gates.hpp"
#include "fqc/identities.hpp"
#include "fqc/matrix_io.hpp"
#include "fqc/parser.hpp"
#include "fqc/protocols.hpp"
#include "fqc/qft.hpp"
#include "fqc/state.hpp"

namespace {

using fqc::Complex;

std::string bits_of(std::size_t index, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int b = 0; b < n_qubits; ++b) {
        if (index & (std::size_t{1} << b)) {
            s[n_qubits - 1 - b] = '1';
        }
    }
    return s;
}

fqc::PureState state_from_bits(const std::string &bits, int n_qubits) {
    if (static_cast<int>(bits.size()) != n_qubits) {
        throw std::runtime_error("--state needs exactly " + std::to_string(n_qubits) +
                                 " bits");
    }
    std::size_t index = 0;
    for (int i = 0; i < n_qubits; ++i) {
        const char c = bits[bits.size() - 1 - i]; // q0 is the rightmost character
        if (c == '1') {
            index |= std::size_t{1} << i;
        } else if (c != '0') {
            throw std::runtime_error("--state must be a bitstring of 0s and 1s");
        }
    }
    return fqc::basis_state(n_qubits, index);
}

Complex parse_complex_pair(const std::string &text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::runtime_error("expected RE,IM, got '" + text + "'");
    }
    return Complex{std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

fqc::PureState amplitude_input(const std::string &alpha, const std::string &beta) {
    fqc::PureState s{1, {parse_complex_pair(alpha), parse_complex_pair(beta)}};
    const double norm = fqc::vector_norm(s.amplitudes);
    if (norm == 0.0) {
        throw std::runtime_error("input amplitudes are all zero");
    }
    for (Complex &z : s.amplitudes) {
        z /= norm;
    }
    return s;
}

void print_state(const fqc::PureState &s) {
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        const Complex z = s.amplitudes[i];
        if (std::abs(z) <= 1e-12) {
            continue;
        }
        std::cout << i << " |" << bits_of(i, s.n_qubits)
                  << ">  " << fqc::format_complex(z) << "\n";
    }
}

void print_branches(const fqc::ProtocolResult &result, bool as_json) {
    if (as_json) {
        std::cout << fqc::branches_to_json(result).dump(2) << "\n";
        return;
    }
    for (const fqc::ProtocolBranch &b : result.branches) {
        std::cout << "outcome " << fqc::outcome_string(b.outcome) << "  p="
                  << fqc::format_double(b.probability) << "  fidelity="
                  << fqc::format_double(b.fidelity) << "  state:";
        for (const Complex &z : b.post_state.amplitudes) {
            std::cout << " " << fqc::format_complex(z);
        }
        std::cout << "\n";
    }
}

int run_verify(double tol, const std::string &json_path) {
    const fqc::Report report = fqc::run_all(fqc::Tolerance{tol});
    for (const fqc::CheckResult &r : report.results) {
        std::printf("%s  %-30s %-10s dist=%-12.3e %s\n", r.pass ? "PASS" : "FAIL",
                    r.id.c_str(), r.paper_ref.c_str(), r.distance,
                    r.negative ? "(expected distinct)" : "");
    }
    std::printf("%d passed, %d failed, %zu total\n", report.passed, report.failed,
                report.results.size());
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << fqc::report_to_json(report).dump(2) << "\n";
    }
    return report.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum-circuit algebra toolkit: Fourier-built gates, identity "
                 "verification, and protocol simulation"};
    app.require_subcommand(1);

    auto *verify = app.add_subcommand("verify", "Run the built-in equivalence suite");
    double verify_tol = 1e-10;
    std::string verify_json;
    verify->add_option("--tol", verify_tol, "Frobenius tolerance");
    verify->add_option("--json", verify_json, "Write the JSON report to this path");

    auto *equiv = app.add_subcommand("equiv", "Compare two circuit files up to global phase");
    std::string equiv_a, equiv_b;
    double equiv_tol = 1e-10;
    equiv->add_option("a", equiv_a, "First .fqc file")->required();
    equiv->add_option("b", equiv_b, "Second .fqc file")->required();
    equiv->add_option("--tol", equiv_tol, "Frobenius tolerance");

    auto *sim = app.add_subcommand("sim", "Simulate a circuit file");
    std::string sim_file, sim_state;
    bool sim_branches = false;
    bool sim_json = false;
    int sim_samples = 0;
    unsigned sim_seed = 1;
    sim->add_option("file", sim_file, ".fqc file")->required();
    sim->add_option("--state", sim_state, "Initial basis state (q0 is the rightmost bit)");
    sim->add_flag("--branches", sim_branches, "Measure every qubit and print the branch table");
    sim->add_flag("--json", sim_json, "Print branch table as JSON (with --branches)");
    sim->add_option("--sample", sim_samples,
                    "Demo sampler: draw N outcomes from the branch distribution");
    sim->add_option("--seed", sim_seed, "Sampler seed");

    auto *matrix = app.add_subcommand("matrix", "Print a circuit's unitary");
    std::string matrix_file, matrix_format = "json";
    matrix->add_option("file", matrix_file, ".fqc file")->required();
    matrix->add_option("--format", matrix_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto *teleport = app.add_subcommand("teleport", "Run the teleportation protocol");
    std::string tp_alpha = "1,0", tp_beta = "0,0", tp_variant = "a";
    bool tp_json = false;
    teleport->add_option("--alpha", tp_alpha, "Amplitude of |0> as RE,IM");
    teleport->add_option("--beta", tp_beta, "Amplitude of |1> as RE,IM");
    teleport->add_option("--variant", tp_variant, "Circuit vocabulary a|b|c|d")
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    teleport->add_flag("--json", tp_json, "Print branch table as JSON");

    auto *qss = app.add_subcommand("qss", "Run the secret-sharing protocol");
    std::string qss_alpha = "1,0", qss_beta = "0,0", qss_variant = "a";
    int qss_parties = 3;
    bool qss_json = false;
    qss->add_option("--parties", qss_parties, "3 or 4")->check(CLI::IsMember({3, 4}));
    qss->add_option("--alpha", qss_alpha, "Amplitude of |0> as RE,IM");
    qss->add_option("--beta", qss_beta, "Amplitude of |1> as RE,IM");
    qss->add_option("--variant", qss_variant, "Circuit vocabulary a|b|c|d|e")
        ->check(CLI::IsMember({"a", "b", "c", "d", "e"}));
    qss->add_flag("--json", qss_json, "Print branch table as JSON");

    auto *catalog = app.add_subcommand("catalog", "Dump every gate as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            return run_verify(verify_tol, verify_json);
        }
        if (equiv->parsed()) {
            const fqc::ComplexMatrix ua = fqc::unitary_of(fqc::parse_file(equiv_a));
            const fqc::ComplexMatrix ub = fqc::unitary_of(fqc::parse_file(equiv_b));
            const fqc::PhaseDistance pd = fqc::dist_up_to_phase(ua, ub);
            const bool equal = pd.distance < equiv_tol;
            std::cout << "distance " << fqc::format_double(pd.distance) << "\nphase "
                      << fqc::format_double(pd.phase) << "\nequivalent "
                      << (equal ? "yes" : "no") << "\n";
            return equal ? 0 : 1;
        }
        if (sim->parsed()) {
            const fqc::Circuit c = fqc::parse_file(sim_file);
            fqc::PureState initial = sim_state.empty()
                                         ? fqc::basis_state(c.n_qubits)
                                         : state_from_bits(sim_state, c.n_qubits);
            const fqc::PureState final_state = fqc::apply(c, initial);
            if (!sim_branches && sim_samples <= 0) {
                print_state(final_state);
                return 0;
            }
            std::vector<fqc::QubitIndex> all;
            for (int q = 0; q < c.n_qubits; ++q) {
                all.push_back(q);
            }
            if (sim_samples > 0) {
                const auto branches = fqc::measure(final_state, all);
                std::vector<double> weights;
                for (const fqc::Branch &b : branches) {
                    weights.push_back(b.probability);
                }
                std::mt19937 rng(sim_seed);
                std::discrete_distribution<std::size_t> draw(weights.begin(),
                                                             weights.end());
                std::vector<int> counts(branches.size(), 0);
                for (int s = 0; s < sim_samples; ++s) {
                    ++counts[draw(rng)];
                }
                for (std::size_t i = 0; i < branches.size(); ++i) {
                    std::cout << "outcome " << fqc::outcome_string(branches[i].outcome)
                              << "  count " << counts[i] << "/" << sim_samples << "\n";
                }
                return 0;
            }
            fqc::ProtocolResult table{"measurement", {}};
            for (const fqc::Branch &b : fqc::measure(final_state, all)) {
                table.branches.push_back(
                    fqc::ProtocolBranch{b.outcome, b.probability, b.post_state, 0.0});
            }
            if (sim_json) {
                std::cout << fqc::branches_to_json(table).dump(2) << "\n";
            } else {
                for (const auto &b : table.branches) {
                    std::cout << "outcome " << fqc::outcome_string(b.outcome) << "  p="
                              << fqc::format_double(b.probability) << "\n";
                }
            }
            return 0;
        }
        if (matrix->parsed()) {
            const fqc::ComplexMatrix u = fqc::unitary_of(fqc::parse_file(matrix_file));
            if (matrix_format == "json") {
                std::cout << fqc::matrix_to_json(u).dump(2) << "\n";
            } else {
                std::cout << fqc::matrix_to_csv(u);
            }
            return 0;
        }
        if (teleport->parsed()) {
            const fqc::PureState input = amplitude_input(tp_alpha, tp_beta);
            const auto variant =
                static_cast<fqc::TeleportVariant>(tp_variant[0] - 'a');
            print_branches(fqc::teleport(input, variant), tp_json);
            return 0;
        }
        if (qss->parsed()) {
            const fqc::PureState input = amplitude_input(qss_alpha, qss_beta);
            const auto variant = static_cast<fqc::QssVariant>(qss_variant[0] - 'a');
            print_branches(fqc::qss(input, qss_parties, variant), qss_json);
            return 0;
        }
        if (catalog->parsed()) {
            nlohmann::json out = nlohmann::json::array();
            for (const fqc::GateDef &gate : fqc::GateCatalog::instance().all()) {
                out.push_back({{"name", gate.name},
                               {"arity", gate.arity},
                               {"matrix", fqc::matrix_to_json(gate.matrix)}});
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    } catch (const fqc::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
