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
//
// End-to-end acceptance suite. Each test case checks one shipped guarantee
// at its stated tolerance and prints a single PASS/FAIL line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <sys/wait.h>

#include "fqc/gates.hpp"
#include "fqc/identities.hpp"
#include "fqc/parser.hpp"
#include "fqc/protocols.hpp"
#include "fqc/qft.hpp"
#include "fqc/state.hpp"

#include "test_support.hpp"

using namespace fqc;
using fqc::test::kInvSqrt2;

#ifndef FQC_CIRCUITS_DIR
#define FQC_CIRCUITS_DIR "."
#endif
#ifndef FQC_CLI_PATH
#define FQC_CLI_PATH ""
#endif

namespace {

void report(int criterion, bool ok, const char *description) {
    std::printf("criterion %2d [%s] %s\n", criterion, ok ? "PASS" : "FAIL", description);
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "criterion ", criterion, ": ", description);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

const Complex kI{0, 1};

ComplexMatrix eq7a_literal() {
    return 0.5 * ComplexMatrix(4, {1, 1,   1,  1,   //
                                   1, kI,  -1, -kI, //
                                   1, -1,  1,  -1,  //
                                   1, -kI, -1, kI});
}

ComplexMatrix eq7b_literal() {
    return 0.5 * ComplexMatrix(4, {1, 1,   1,  1,   //
                                   1, -kI, -1, kI,  //
                                   1, -1,  1,  -1,  //
                                   1, kI,  -1, -kI});
}

ComplexMatrix eq8_literal() {
    return ComplexMatrix(4, {1, 0, 0, 0, //
                             0, 0, 0, 1, //
                             0, 0, 1, 0, //
                             0, 1, 0, 0});
}

double max_entry_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("criterion 1: fourier literals") {
    bool ok = qft_matrix(1) == GateCatalog::instance().at("h").matrix;
    ok &= max_entry_distance(qft_matrix(2), eq7a_literal()) < 1e-12;
    ok &= max_entry_distance(iqft_matrix(2), eq7b_literal()) < 1e-12;
    report(1, ok, "qft matrices equal their printed forms (n = 1 exactly, n = 2 within 1e-12)");
}

TEST_CASE("criterion 2: squared fourier matrices give the cnot") {
    const ComplexMatrix f = qft_matrix(2);
    const ComplexMatrix fi = iqft_matrix(2);
    bool ok = max_entry_distance(f * f, eq8_literal()) < 1e-12;
    ok &= max_entry_distance(fi * fi, eq8_literal()) < 1e-12;
    report(2, ok, "F4*F4 and F4^-1*F4^-1 equal the cnot permutation within 1e-12");
}

TEST_CASE("criterion 3: sqrt-cnot squares to cnot but is no fourier matrix") {
    const ComplexMatrix sq = GateCatalog::instance().at("sqcx").matrix;
    bool ok = max_entry_distance(sq * sq, eq8_literal()) < 1e-12;
    ok &= dist_up_to_phase(sq, qft_matrix(2)).distance > 0.1;
    ok &= dist_up_to_phase(sq, iqft_matrix(2)).distance > 0.1;
    report(3, ok, "sqrt-cnot^2 = cnot within 1e-12 and stays > 0.1 from F4 and F4^-1");
}

TEST_CASE("criterion 4: single-qubit recipes are exact") {
    const auto &cat = GateCatalog::instance();
    const ComplexMatrix h = cat.at("h").matrix;
    const ComplexMatrix x = cat.at("x").matrix;
    const ComplexMatrix z = cat.at("z").matrix;

    bool ok = frobenius_distance(h * h, ComplexMatrix::identity(2)) < 1e-12;
    ok &= frobenius_distance(flip_h(ComplexMatrix::identity(2)), x) < 1e-12;
    ok &= frobenius_distance(h * x * h, z) < 1e-12;
    ok &= frobenius_distance(Complex{0, 1} * flip_h(z), cat.at("y").matrix) < 1e-12;
    ok &= frobenius_distance(cat.at("t").matrix * cat.at("t").matrix, cat.at("s").matrix) <
          1e-12;
    ok &= frobenius_distance(cat.at("u").matrix * cat.at("u").matrix, cat.at("t").matrix) <
          1e-12;
    ok &= frobenius_distance(cat.at("s").matrix * cat.at("s").matrix, z) < 1e-12;
    ok &= frobenius_distance(h * cat.at("t").matrix * cat.at("t").matrix * h,
                             cat.at("v").matrix) < 1e-12;
    ok &= frobenius_distance(cat.at("v").matrix * cat.at("v").matrix, x) < 1e-12;
    report(4, ok, "pauli recipes, phase chain, and V = HTTH / V^2 = X within 1e-12");
}

TEST_CASE("criterion 5: fourier circuits match the matrices for n = 1..8") {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        ok &= dist_up_to_phase(unitary_of(qft_circuit({n, false, true})), qft_matrix(n))
                  .distance < 1e-9;
        ok &= dist_up_to_phase(unitary_of(qft_circuit({n, true, true})), iqft_matrix(n))
                  .distance < 1e-9;
    }
    const double elapsed = seconds_since(start);
    ok &= elapsed < 5.0;
    std::printf("    (criterion 5 ran in %.2fs)\n", elapsed);
    report(5, ok, "qft circuit decompositions within 1e-9 of the matrices, n = 1..8, < 5s");
}

TEST_CASE("criterion 6: the equivalence suite passes and verify exits 0") {
    const Report suite = run_all(Tolerance{1e-10});
    bool ok = suite.results.size() >= 25;
    int negatives = 0;
    for (const CheckResult &r : suite.results) {
        ok &= r.pass;
        if (r.negative) {
            ++negatives;
            ok &= r.distance > 0.1;
        }
    }
    ok &= negatives == 1;

    bool cli_ok = false;
    const std::string cli = FQC_CLI_PATH;
    if (!cli.empty()) {
        const int status = std::system((cli + " verify > /dev/null").c_str());
        cli_ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
    }
    ok &= cli_ok;
    report(6, ok, "all positive identities pass at 1e-10, the negative stays > 0.1, verify exits 0");
}

TEST_CASE("criterion 7: bell and ghz preparations") {
    bool ok = true;
    const PureState bell_ref{2, {kInvSqrt2, 0, 0, kInvSqrt2}};
    for (BellVariant v : {BellVariant::a, BellVariant::b, BellVariant::c}) {
        const PureState s = apply(bell_pair(v), basis_state(2));
        ok &= std::abs(fidelity(bell_ref, s) - 1.0) < 1e-12;
    }
    for (int n : {3, 4}) {
        for (GhzVariant v : {GhzVariant::a, GhzVariant::b, GhzVariant::c}) {
            const PureState s = apply(ghz(n, v), basis_state(n));
            const std::size_t top = (std::size_t{1} << n) - 1;
            ok &= std::abs(std::abs(s.amplitudes[0]) - kInvSqrt2) < 1e-12;
            ok &= std::abs(std::abs(s.amplitudes[top]) - kInvSqrt2) < 1e-12;
            for (std::size_t i = 1; i < top; ++i) {
                ok &= std::abs(s.amplitudes[i]) < 1e-12;
            }
        }
    }
    report(7, ok, "bell variants give (|00>+|11>)/sqrt(2); ghz variants weight only the ends");
}

TEST_CASE("criterion 8: teleportation across 100 random states and 4 variants") {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(20260809);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const PureState input = fqc::test::random_state(1, rng);
        ProtocolResult reference;
        for (TeleportVariant v : {TeleportVariant::a, TeleportVariant::b,
                                  TeleportVariant::c, TeleportVariant::d}) {
            const ProtocolResult result = teleport(input, v);
            ok &= result.branches.size() == 4;
            for (const ProtocolBranch &b : result.branches) {
                ok &= std::abs(b.probability - 0.25) <= 1e-12;
                ok &= b.fidelity >= 1.0 - 1e-12;
            }
            if (v == TeleportVariant::a) {
                reference = result;
            } else {
                for (std::size_t i = 0; i < 4; ++i) {
                    ok &= reference.branches[i].outcome == result.branches[i].outcome;
                    ok &= std::abs(reference.branches[i].probability -
                                   result.branches[i].probability) < 1e-12;
                    ok &= fqc::test::states_phase_equal(reference.branches[i].post_state,
                                                        result.branches[i].post_state,
                                                        1e-10);
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    ok &= elapsed < 2.0;
    std::printf("    (criterion 8 ran in %.2fs)\n", elapsed);
    report(8, ok, "teleportation: 4 branches at 0.25, fidelity 1, identical tables, < 2s");
}

TEST_CASE("criterion 9: secret sharing across random secrets, parties, variants") {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(424242);
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        const PureState secret = fqc::test::random_state(1, rng);
        for (int parties : {3, 4}) {
            ProtocolResult reference;
            for (QssVariant v : {QssVariant::a, QssVariant::b, QssVariant::c,
                                 QssVariant::d, QssVariant::e}) {
                const ProtocolResult result = qss(secret, parties, v);
                ok &= result.branches.size() == (parties == 3 ? 8u : 16u);
                double total = 0.0;
                for (const ProtocolBranch &b : result.branches) {
                    total += b.probability;
                    ok &= b.fidelity >= 1.0 - 1e-10;
                }
                ok &= std::abs(total - 1.0) < 1e-10;
                if (v == QssVariant::a) {
                    reference = result;
                } else {
                    for (std::size_t i = 0; i < result.branches.size(); ++i) {
                        ok &= reference.branches[i].outcome ==
                              result.branches[i].outcome;
                        ok &= std::abs(reference.branches[i].probability -
                                       result.branches[i].probability) < 1e-10;
                        ok &= fqc::test::states_phase_equal(
                            reference.branches[i].post_state,
                            result.branches[i].post_state, 1e-10);
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    ok &= elapsed < 5.0;
    std::printf("    (criterion 9 ran in %.2fs)\n", elapsed);
    report(9, ok, "secret sharing reconstructs every branch for all variants, < 5s");
}

TEST_CASE("criterion 10: property suites") {
    bool ok = true;

    // Fourth power of the Fourier matrix is the identity.
    for (int n = 1; n <= 8; ++n) {
        const ComplexMatrix f = qft_matrix(n);
        const ComplexMatrix f2 = f * f;
        ok &= frobenius_distance(f2 * f2, ComplexMatrix::identity(f.dim())) < 1e-9;
    }

    // Flips are reversal-permutation products.
    std::mt19937 rng(1234);
    for (std::size_t dim = 2; dim <= 8; ++dim) {
        const ComplexMatrix a = fqc::test::random_matrix(dim, rng);
        const ComplexMatrix rev = reversal_permutation(dim);
        ok &= frobenius_distance(flip_h(a), rev * a) < 1e-12;
        ok &= frobenius_distance(flip_v(a), a * rev) < 1e-12;
    }

    // Shipped circuit files re-parse to the same circuit after emit.
    int files = 0;
    for (const auto &entry : std::filesystem::directory_iterator(FQC_CIRCUITS_DIR)) {
        if (entry.path().extension() != ".fqc") {
            continue;
        }
        ++files;
        const Circuit parsed = parse_file(entry.path().string());
        bool emittable = true;
        for (const CircuitOp &op : parsed.ops) {
            emittable &= mnemonic_of(op).has_value();
        }
        if (emittable) {
            ok &= parse(emit(parsed)) == parsed;
        }
    }
    ok &= files >= 10;

    // Parser fuzz: ten thousand junk inputs, no crash.
    std::uniform_int_distribution<int> length(0, 120);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int trial = 0; trial < 10000; ++trial) {
        std::string source;
        const int n = length(rng);
        for (int i = 0; i < n; ++i) {
            source += static_cast<char>(byte(rng));
        }
        try {
            (void)parse(source);
        } catch (const ParseError &) {
        }
    }

    report(10, ok, "F^4 = I, flip permutation laws, emit round-trips, fuzz run clean");
}
