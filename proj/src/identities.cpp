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
#include "fqc/identities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "fqc/gates.hpp"
#include "fqc/qft.hpp"

namespace fqc {

namespace {

const ComplexMatrix &g(std::string_view name) {
    return GateCatalog::instance().at(name).matrix;
}

using OpSpec = std::pair<const char *, std::vector<int>>;

Circuit build(int n, const std::vector<OpSpec> &ops) {
    Circuit c{n, {}};
    for (const auto &[mnemonic, wires] : ops) {
        add(c, mnemonic, wires);
    }
    return c;
}

void append(Circuit &c, const std::vector<OpSpec> &ops) {
    for (const auto &[mnemonic, wires] : ops) {
        add(c, mnemonic, wires);
    }
}

/// CNOT spelled as {H, Controlled-S^-1}: H(t) CS^-1 CS^-1 H(t).
void append_hcsdg_cnot(Circuit &c, int control, int target) {
    append(c, {{"h", {target}},
               {"csdg", {control, target}},
               {"csdg", {control, target}},
               {"h", {target}}});
}

Identity make(std::string id, std::string ref, Expr lhs, Expr rhs) {
    return Identity{std::move(id), std::move(ref), std::move(lhs), std::move(rhs),
                    false, 0.0, std::nullopt};
}

Identity make_negative(std::string id, std::string ref, Expr lhs, Expr rhs,
                       double min_distance) {
    return Identity{std::move(id), std::move(ref), std::move(lhs), std::move(rhs),
                    true, min_distance, std::nullopt};
}

ComplexMatrix qft2_literal() {
    const Complex i{0, 1};
    return 0.5 * ComplexMatrix(4, {1, 1,  1,  1,  //
                                   1, i,  -1, -i, //
                                   1, -1, 1,  -1, //
                                   1, -i, -1, i});
}

ComplexMatrix iqft2_literal() {
    const Complex i{0, 1};
    return 0.5 * ComplexMatrix(4, {1, 1,  1,  1,  //
                                   1, -i, -1, i,  //
                                   1, -1, 1,  -1, //
                                   1, i,  -1, -i});
}

/// The V / V^-1 network for the Toffoli with controls 0, 1 and target 2;
/// `fourier_cnots` swaps the plain CNOTs for their Fourier spelling.
Circuit toffoli_v_network(bool fourier_cnots) {
    Circuit c{3, {}};
    add(c, "cv", {1, 2});
    if (fourier_cnots) {
        append_fourier_cnot(c, 0, 1);
    } else {
        add(c, "cx", {0, 1});
    }
    add(c, "cvdg", {1, 2});
    if (fourier_cnots) {
        append_fourier_cnot(c, 0, 1);
    } else {
        add(c, "cx", {0, 1});
    }
    add(c, "cv", {0, 2});
    return c;
}

/// Controlled inverse-Fourier block gate: control on one wire, the 2-qubit
/// inverse Fourier matrix on a wire pair.
CircuitOp controlled_iqft2_op(int control, int pair_low, int pair_high) {
    CircuitOp op;
    op.matrix = iqft_matrix(2);
    op.targets = {pair_low, pair_high};
    op.controls = {control};
    return op;
}

/// Miller-gate reference construction over {flipped CNOT, step-over CNOT,
/// Toffoli}: a palindrome of CNOTs from the top wire around a Toffoli
/// targeting it. `fourier_cnots` swaps the CNOTs for their Fourier
/// spelling, keeping the Toffoli as a module.
Circuit miller_construction(bool fourier_cnots) {
    Circuit c{3, {}};
    auto cnot = [&](int control, int target) {
        if (fourier_cnots) {
            append_fourier_cnot(c, control, target);
        } else {
            add(c, "cx", {control, target});
        }
    };
    cnot(2, 1);
    cnot(2, 0);
    add(c, "ccx", {1, 0, 2});
    cnot(2, 0);
    cnot(2, 1);
    return c;
}

std::vector<Identity> build_catalog() {
    std::vector<Identity> ids;
    const ComplexMatrix h = g("h");
    const ComplexMatrix x = g("x");
    const ComplexMatrix z = g("z");
    const ComplexMatrix cx_mat = g("cx");
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix f4 = qft_matrix(2);
    const ComplexMatrix if4 = iqft_matrix(2);

    // Single-qubit algebra.
    ids.push_back(make("eq3-qft1-h", "Eq. (3)", qft_matrix(1), h));
    ids.push_back(make("eq3-h-self-inverse", "Eq. (3)", dagger(h), h));
    ids.push_back(make("eq4a-identity-hh", "Eq. (4a)", h * h, i2));
    ids.push_back(make("eq4b-x-flip", "Eq. (4b)", flip_h(i2), x));
    ids.push_back(make("eq4c-z-hxh", "Eq. (4c)", h * x * h, z));
    ids.push_back(make("eq4c-z-flip-recipe", "Eq. (4c)",
                       x * (flip_h(h) * flip_h(h)), z));
    ids.push_back(make("eq4d-y-flip", "Eq. (4d)", Complex{0, 1} * flip_h(z), g("y")));
    ids.push_back(make("sec2a-h-from-x-z", "Sec. II.A",
                       Complex{1.0 / std::numbers::sqrt2, 0} * (x + z), h));
    ids.push_back(make("fig1-splitting-xh", "Fig. 1", g("splitting"), x * h));
    ids.push_back(make("fig1-recombining-hx", "Sec. II.A", g("recombining"), h * x));

    // Phase-gate square roots.
    ids.push_back(make("eq5a-s-squares-to-z", "Eq. (5a)", g("s") * g("s"), z));
    ids.push_back(make("eq5b-sdg-conj", "Eq. (5b)", g("s") * g("sdg"), i2));
    ids.push_back(make("eq5c-t-squares-to-s", "Eq. (5c)", g("t") * g("t"), g("s")));
    ids.push_back(make("eq5e-u-squares-to-t", "Eq. (5e)", g("u") * g("u"), g("t")));
    ids.push_back(make("eq6a-v-recipe", "Eq. (6a)", h * g("t") * g("t") * h, g("v")));
    ids.push_back(make("eq6a-v-squares-to-x", "Eq. (6a)", g("v") * g("v"), x));
    ids.push_back(make("eq6b-vdg-recipe", "Eq. (6b)",
                       h * g("tdg") * g("tdg") * h, g("vdg")));

    // The 2-qubit Fourier matrix and the CNOT.
    ids.push_back(make("eq7a-qft2-literal", "Eq. (7a)", f4, qft2_literal()));
    ids.push_back(make("eq7b-iqft2-literal", "Eq. (7b)", if4, iqft2_literal()));
    ids.push_back(make("eq8-cnot-qft-squared", "Eq. (8)", f4 * f4, cx_mat));
    ids.push_back(make("eq8-cnot-iqft-squared", "Eq. (8)", if4 * if4, cx_mat));
    ids.push_back(make("eq9-qft2-times-inverse", "Eq. (9)", f4 * if4,
                       ComplexMatrix::identity(4)));
    ids.push_back(make("eq10-sqrt-cnot-squared", "Eq. (10)",
                       g("sqcx") * g("sqcx"), cx_mat));
    ids.push_back(make_negative("eq10-sqrt-cnot-vs-qft2", "Eq. (10)", g("sqcx"), f4, 0.1));

    // Fourier circuits.
    ids.push_back(make("eq3-qft1-circuit", "Eq. (3)", qft_circuit({1, false, true}), h));
    ids.push_back(make("fig2a-qft2-circuit", "Fig. 2(a)", qft_circuit({2, false, true}), f4));
    ids.push_back(make("fig2b-iqft2-circuit", "Fig. 2(b)", qft_circuit({2, true, true}), if4));
    ids.push_back(make("fig3-cnot-hh-conjugation", "Fig. 3",
                       kron(h, h) * g("cx") * kron(h, h),
                       fqc::cnot(CnotOrientation::control_q1_target_q0).matrix));
    ids.push_back(make("fig4a-qft2-squared-circuit", "Fig. 4(a)",
                       qft_squared_circuit(2, false), cx_mat));
    ids.push_back(make("fig4b-iqft2-squared-circuit", "Fig. 4(b)",
                       qft_squared_circuit(2, true), cx_mat));
    ids.push_back(make("fig4-swap-cancellation", "Fig. 4",
                       compose(qft_circuit({2, false, true}), qft_circuit({2, false, true})),
                       qft_squared_circuit(2, false)));

    // Flipped CNOT and SWAP forms.
    const ComplexMatrix flipped = embed(g("cx"), {1, 0}, 2);
    ids.push_back(make("fig5-flipped-cnot", "Fig. 5", flipped_cnot(), flipped));
    {
        Circuit c{2, {}};
        append(c, {{"h", {0}}, {"h", {1}}});
        append_fourier_cnot(c, 0, 1);
        append(c, {{"h", {0}}, {"h", {1}}});
        ids.push_back(make("fig5-flipped-cnot-fourier", "Fig. 5", std::move(c), flipped));
    }
    {
        const auto forms = swap_constructions();
        ids.push_back(make("fig6-swap-cnots", "Fig. 6", forms[0], g("swap")));
        ids.push_back(make("fig6-swap-hadamard", "Fig. 6", forms[1], g("swap")));
        ids.push_back(make("fig6-swap-fourier", "Fig. 6", forms[2], g("swap")));
    }

    // Controlled-S spellings.
    ids.push_back(make("fig7a-cs-first-form", "Fig. 7(a)",
                       build(2, {{"t", {0}}, {"t", {1}}, {"cx", {0, 1}},
                                 {"tdg", {1}}, {"cx", {0, 1}}}),
                       g("cs")));
    ids.push_back(make("fig7b-cs-second-form", "Fig. 7(b)",
                       build(2, {{"t", {1}}, {"t", {0}}, {"cx", {1, 0}},
                                 {"tdg", {0}}, {"cx", {1, 0}}}),
                       g("cs")));
    ids.push_back(make("fig7c-csdg-first-form", "Fig. 7(c)",
                       build(2, {{"tdg", {0}}, {"tdg", {1}}, {"cx", {0, 1}},
                                 {"t", {1}}, {"cx", {0, 1}}}),
                       g("csdg")));
    ids.push_back(make("fig7d-csdg-second-form", "Fig. 7(d)",
                       build(2, {{"tdg", {1}}, {"tdg", {0}}, {"cx", {1, 0}},
                                 {"t", {0}}, {"cx", {1, 0}}}),
                       g("csdg")));
    {
        Circuit c{2, {}};
        append(c, {{"t", {0}}, {"t", {1}}});
        append_fourier_cnot(c, 0, 1);
        add(c, "tdg", {1});
        append_fourier_cnot(c, 0, 1);
        ids.push_back(make("fig7-cs-fourier-cnot", "Fig. 7", std::move(c), g("cs")));
    }

    // Anti-control.
    {
        Circuit anti{2, {}};
        anti.ops.push_back(op_from_mnemonic("cx", {0, 1}, {true, false}));
        ids.push_back(make("fig8-anti-control-inverters", "Fig. 8",
                           build(2, {{"x", {0}}, {"cx", {0, 1}}, {"x", {0}}}), anti));
        Circuit fourier{2, {}};
        add(fourier, "x", {0});
        append_fourier_cnot(fourier, 0, 1);
        add(fourier, "x", {0});
        ids.push_back(make("fig8-anti-control-fourier", "Fig. 8", std::move(fourier), anti));
    }

    // CNOT from the Fourier ladder.
    ids.push_back(make("fig9a-cnot-h-cs", "Fig. 9(a)",
                       build(2, {{"h", {1}}, {"cs", {0, 1}}, {"cs", {0, 1}}, {"h", {1}}}),
                       cx_mat));
    ids.push_back(make("fig9b-cnot-h-csdg", "Fig. 9(b)",
                       build(2, {{"h", {1}}, {"csdg", {0, 1}}, {"csdg", {0, 1}}, {"h", {1}}}),
                       cx_mat));

    // Controlled-Z spellings.
    ids.push_back(make("fig10-cz-h-cnot", "Fig. 10",
                       build(2, {{"h", {1}}, {"cx", {0, 1}}, {"h", {1}}}), g("cz")));
    {
        Circuit c{2, {}};
        add(c, "h", {1});
        append_fourier_cnot(c, 0, 1);
        add(c, "h", {1});
        ids.push_back(make("fig10-cz-fourier", "Fig. 10", std::move(c), g("cz")));
    }
    {
        Circuit c{2, {}};
        add(c, "h", {1});
        append_hcsdg_cnot(c, 0, 1);
        add(c, "h", {1});
        ids.push_back(make("fig10-cz-h-csdg", "Fig. 10", std::move(c), g("cz")));
    }
    ids.push_back(make("fig10-cz-csdg-squared", "Fig. 10",
                       build(2, {{"csdg", {0, 1}}, {"csdg", {0, 1}}}), g("cz")));

    // Controlled-Y / T / H / V.
    ids.push_back(make("fig11-cy", "Fig. 11",
                       build(2, {{"sdg", {1}}, {"cx", {0, 1}}, {"s", {1}}}), g("cy")));
    {
        Circuit c{2, {}};
        add(c, "sdg", {1});
        append_fourier_cnot(c, 0, 1);
        add(c, "s", {1});
        ids.push_back(make("fig11-cy-fourier", "Fig. 11", std::move(c), g("cy")));
    }
    ids.push_back(make("fig12-ct", "Fig. 12",
                       build(2, {{"u", {0}}, {"u", {1}}, {"cx", {0, 1}},
                                 {"udg", {1}}, {"cx", {0, 1}}}),
                       g("ct")));
    {
        Circuit c{2, {}};
        append(c, {{"u", {0}}, {"u", {1}}});
        append_fourier_cnot(c, 0, 1);
        add(c, "udg", {1});
        append_fourier_cnot(c, 0, 1);
        ids.push_back(make("fig12-ct-fourier", "Fig. 12", std::move(c), g("ct")));
    }
    ids.push_back(make("fig13-ch", "Fig. 13",
                       build(2, {{"s", {1}}, {"h", {1}}, {"t", {1}}, {"cx", {0, 1}},
                                 {"tdg", {1}}, {"h", {1}}, {"sdg", {1}}}),
                       g("ch")));
    {
        Circuit c{2, {}};
        append(c, {{"s", {1}}, {"h", {1}}, {"t", {1}}});
        append_fourier_cnot(c, 0, 1);
        append(c, {{"tdg", {1}}, {"h", {1}}, {"sdg", {1}}});
        ids.push_back(make("fig13-ch-fourier", "Fig. 13", std::move(c), g("ch")));
    }
    ids.push_back(make("fig14a-cv-h-ct", "Fig. 14(a)",
                       build(2, {{"h", {1}}, {"ct", {0, 1}}, {"ct", {0, 1}}, {"h", {1}}}),
                       g("cv")));
    ids.push_back(make("fig14a-cv-flipped-cnot", "Fig. 14(a)",
                       build(2, {{"h", {1}}, {"t", {1}}, {"t", {0}}, {"cx", {1, 0}},
                                 {"tdg", {0}}, {"cx", {1, 0}}, {"h", {1}}}),
                       g("cv")));
    ids.push_back(make("fig14b-cvdg-h-ctdg", "Fig. 14(b)",
                       build(2, {{"h", {1}}, {"ctdg", {0, 1}}, {"ctdg", {0, 1}}, {"h", {1}}}),
                       g("cvdg")));

    // Three-qubit Fourier circuits.
    ids.push_back(make("fig15a-qft3-circuit", "Fig. 15(a)",
                       qft_circuit({3, false, true}), qft_matrix(3)));
    ids.push_back(make("fig15b-iqft3-circuit", "Fig. 15(b)",
                       qft_circuit({3, true, true}), iqft_matrix(3)));
    ids.push_back(make("fig16-iqft3-squared-swapfree", "Fig. 16",
                       qft_squared_circuit(3, true), iqft_matrix(3) * iqft_matrix(3)));

    // Step-over CNOT.
    const Circuit step_over = build(3, {{"cx", {0, 2}}});
    ids.push_back(make("fig17-step-over-swap-high", "Fig. 17",
                       build(3, {{"swap", {1, 2}}, {"cx", {0, 1}}, {"swap", {1, 2}}}),
                       step_over));
    ids.push_back(make("fig17-step-over-swap-low", "Fig. 17",
                       build(3, {{"swap", {0, 1}}, {"cx", {1, 2}}, {"swap", {0, 1}}}),
                       step_over));
    ids.push_back(make("fig17-step-over-relay", "Fig. 17",
                       build(3, {{"cx", {0, 1}}, {"cx", {1, 2}}, {"cx", {0, 1}}, {"cx", {1, 2}}}),
                       step_over));
    {
        Circuit c{3, {}};
        append_fourier_cnot(c, 0, 1);
        append_fourier_cnot(c, 1, 2);
        append_fourier_cnot(c, 0, 1);
        append_fourier_cnot(c, 1, 2);
        ids.push_back(make("fig17-step-over-fourier", "Fig. 17", std::move(c), step_over));
    }

    // Double Feynman.
    const Circuit double_feynman = build(3, {{"cx", {0, 1}}, {"cx", {0, 2}}});
    ids.push_back(make("fig18-double-feynman-step-over", "Fig. 18",
                       build(3, {{"cx", {0, 1}}, {"swap", {1, 2}}, {"cx", {0, 1}},
                                 {"swap", {1, 2}}}),
                       double_feynman));
    {
        Circuit c{3, {}};
        append_hcsdg_cnot(c, 0, 1);
        append_hcsdg_cnot(c, 0, 2);
        ids.push_back(make("fig18-double-feynman-h-csdg", "Fig. 18", std::move(c),
                           double_feynman));
    }

    // Toffoli family.
    const Circuit toffoli = build(3, {{"ccx", {0, 1, 2}}});
    ids.push_back(make("fig19-toffoli-literal", "Fig. 19", toffoli,
                       embed(with_controls(x, 2), {2, 0, 1}, 3)));
    ids.push_back(make("fig19-fredkin-sandwich", "Fig. 19",
                       build(3, {{"cx", {2, 1}}, {"ccx", {0, 1, 2}}, {"cx", {2, 1}}}),
                       build(3, {{"cswap", {0, 1, 2}}})));
    ids.push_back(make("fig19-peres-ordering", "Fig. 19",
                       build(3, {{"ccx", {0, 1, 2}}, {"cx", {0, 1}}}),
                       build(3, {{"peres", {0, 1, 2}}})));
    ids.push_back(make("fig19-miller-construction", "Fig. 19", miller_construction(false),
                       build(3, {{"miller", {0, 1, 2}}})));
    ids.push_back(make("fig20-toffoli-fourier", "Fig. 20", toffoli_v_network(true), toffoli));
    {
        Circuit c{3, {}};
        append_fourier_cnot(c, 2, 1);
        add(c, "ccx", {0, 1, 2});
        append_fourier_cnot(c, 2, 1);
        ids.push_back(make("fig20-fredkin-module", "Fig. 20", std::move(c),
                           build(3, {{"cswap", {0, 1, 2}}})));
    }
    {
        Circuit c{3, {}};
        add(c, "ccx", {0, 1, 2});
        append_fourier_cnot(c, 0, 1);
        ids.push_back(make("fig20-peres-module", "Fig. 20", std::move(c),
                           build(3, {{"peres", {0, 1, 2}}})));
    }
    ids.push_back(make("fig20-miller-module", "Fig. 20", miller_construction(true),
                       build(3, {{"miller", {0, 1, 2}}})));
    {
        // Fig. 22's network with the controlled-V pieces spelled over
        // {H, Controlled-T, Controlled-S^-1, Controlled-T^-1}.
        Circuit c{3, {}};
        append(c, {{"h", {2}}, {"ct", {1, 2}}, {"ct", {1, 2}}, {"h", {2}}});
        append_hcsdg_cnot(c, 0, 1);
        append(c, {{"h", {2}}, {"ctdg", {1, 2}}, {"ctdg", {1, 2}}, {"h", {2}}});
        append_hcsdg_cnot(c, 0, 1);
        append(c, {{"h", {2}}, {"ct", {0, 2}}, {"ct", {0, 2}}, {"h", {2}}});
        ids.push_back(make("fig21-toffoli-phase-gates", "Fig. 21", std::move(c), toffoli));
    }
    ids.push_back(make("fig22-toffoli-v", "Fig. 22", toffoli_v_network(false), toffoli));

    // Controlled inverse-Fourier block (the doubled form is a Toffoli).
    {
        Circuit c{3, {}};
        c.ops.push_back(controlled_iqft2_op(2, 0, 1));
        ids.push_back(make("eq11-controlled-iqft2", "Eq. (11)", controlled(iqft_matrix(2)),
                           std::move(c)));
    }
    {
        Circuit c{3, {}};
        c.ops.push_back(controlled_iqft2_op(0, 1, 2));
        c.ops.push_back(controlled_iqft2_op(0, 1, 2));
        ids.push_back(make("fig23-toffoli-double-cqft", "Fig. 23", std::move(c), toffoli));
    }
    {
        Circuit c{3, {}};
        add(c, "cx", {2, 1});
        c.ops.push_back(controlled_iqft2_op(0, 1, 2));
        c.ops.push_back(controlled_iqft2_op(0, 1, 2));
        add(c, "cx", {2, 1});
        ids.push_back(make("fig23-fredkin-double-cqft", "Fig. 23", std::move(c),
                           build(3, {{"cswap", {0, 1, 2}}})));
    }

    // Four-qubit Fourier circuits.
    ids.push_back(make("fig24a-qft4-circuit", "Fig. 24(a)",
                       qft_circuit({4, false, true}), qft_matrix(4)));
    ids.push_back(make("fig24b-iqft4-circuit", "Fig. 24(b)",
                       qft_circuit({4, true, true}), iqft_matrix(4)));
    ids.push_back(make("fig25-iqft4-squared-swapfree", "Fig. 25",
                       qft_squared_circuit(4, true), iqft_matrix(4) * iqft_matrix(4)));

    // Triple Feynman.
    const Circuit triple_feynman =
        build(4, {{"cx", {0, 1}}, {"cx", {0, 2}}, {"cx", {0, 3}}});
    ids.push_back(make("fig26-triple-feynman-step-over", "Fig. 26",
                       build(4, {{"cx", {0, 1}},
                                 {"swap", {1, 2}}, {"cx", {0, 1}}, {"swap", {1, 2}},
                                 {"swap", {1, 3}}, {"cx", {0, 1}}, {"swap", {1, 3}}}),
                       triple_feynman));
    {
        Circuit c{4, {}};
        append_hcsdg_cnot(c, 0, 1);
        append_hcsdg_cnot(c, 0, 2);
        append_hcsdg_cnot(c, 0, 3);
        ids.push_back(make("fig26-triple-feynman-h-csdg", "Fig. 26", std::move(c),
                           triple_feynman));
    }

    return ids;
}

double round_for_report(double value) {
    return std::round(value * 1e14) / 1e14;
}

} // namespace

ComplexMatrix eval(const Expr &expr) {
    if (const auto *m = std::get_if<ComplexMatrix>(&expr)) {
        return *m;
    }
    return unitary_of(std::get<Circuit>(expr));
}

const std::vector<Identity> &builtin_catalog() {
    static const std::vector<Identity> catalog = build_catalog();
    return catalog;
}

CheckResult check(const Identity &identity, Tolerance tol) {
    try {
        const ComplexMatrix lhs = eval(identity.lhs);
        const ComplexMatrix rhs = eval(identity.rhs);
        const PhaseDistance pd = dist_up_to_phase(lhs, rhs);
        const double eps = identity.tol_override.value_or(tol.eps);
        CheckResult result;
        result.id = identity.id;
        result.paper_ref = identity.paper_ref;
        result.negative = identity.negative;
        result.distance = pd.distance;
        result.phase = pd.phase;
        result.pass = identity.negative ? pd.distance > identity.min_distance
                                        : pd.distance < eps;
        return result;
    } catch (const std::exception &e) {
        throw std::runtime_error("identity " + identity.id + ": " + e.what());
    }
}

Report run_all(const std::vector<Identity> &catalog, Tolerance tol) {
    Report report;
    report.results.reserve(catalog.size());
    for (const Identity &identity : catalog) {
        CheckResult result = check(identity, tol);
        if (result.pass) {
            ++report.passed;
        } else {
            ++report.failed;
            report.all_pass = false;
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

Report run_all(Tolerance tol) { return run_all(builtin_catalog(), tol); }

nlohmann::json report_to_json(const Report &report) {
    nlohmann::json out = nlohmann::json::array();
    for (const CheckResult &r : report.results) {
        out.push_back({{"id", r.id},
                       {"paper_ref", r.paper_ref},
                       {"pass", r.pass},
                       {"distance", round_for_report(r.distance)},
                       {"phase", round_for_report(r.phase)}});
    }
    return out;
}

} // namespace fqc
