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
#include "fqc/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "fqc/qft.hpp"

namespace fqc {

namespace {

void require_normalized(const PureState &s) {
    if (std::abs(vector_norm(s.amplitudes) - 1.0) > 1e-10) {
        throw std::invalid_argument("input state is not normalized");
    }
}

/// CNOT spelled as {H, Controlled-S^-1}: H(t) CS^-1 CS^-1 H(t).
void append_hcsdg_cnot(Circuit &c, QubitIndex control, QubitIndex target) {
    add(c, "h", {target});
    add(c, "csdg", {control, target});
    add(c, "csdg", {control, target});
    add(c, "h", {target});
}

enum class CnotStyle { direct, fourier, hcsdg };

void append_cnot(Circuit &c, QubitIndex control, QubitIndex target, CnotStyle style) {
    switch (style) {
    case CnotStyle::direct:
        add(c, "cx", {control, target});
        return;
    case CnotStyle::fourier:
        append_fourier_cnot(c, control, target);
        return;
    case CnotStyle::hcsdg:
        append_hcsdg_cnot(c, control, target);
        return;
    }
}

/// Correction suffix on the reconstructed wire: pre and post always apply,
/// cond applies only when the driving outcome bit is 1. The pre/post
/// sandwich carries the unconditional gates of spellings like
/// CZ = H CX H, matching the double-wire notation of the protocol circuits.
struct Fix {
    std::vector<std::string> pre;
    std::vector<std::string> cond;
    std::vector<std::string> post;
};

Circuit fix_circuit(const Fix &fix, bool bit) {
    Circuit c{1, {}};
    for (const auto &g : fix.pre) {
        add(c, g, {0});
    }
    if (bit) {
        for (const auto &g : fix.cond) {
            add(c, g, {0});
        }
    }
    for (const auto &g : fix.post) {
        add(c, g, {0});
    }
    return c;
}

Circuit ops_circuit(const std::vector<std::string> &gates) {
    Circuit c{1, {}};
    for (const auto &g : gates) {
        add(c, g, {0});
    }
    return c;
}

struct TeleportVocab {
    CnotStyle cnot;
    Fix x_fix;
    Fix z_fix;
};

TeleportVocab teleport_vocab(TeleportVariant variant) {
    switch (variant) {
    case TeleportVariant::a:
        return {CnotStyle::direct, Fix{{}, {"x"}, {}}, Fix{{}, {"z"}, {}}};
    case TeleportVariant::b:
        return {CnotStyle::direct, Fix{{}, {"x"}, {}}, Fix{{"h"}, {"x"}, {"h"}}};
    case TeleportVariant::c:
        return {CnotStyle::fourier, Fix{{}, {"x"}, {}}, Fix{{"h"}, {"x"}, {"h"}}};
    case TeleportVariant::d:
        return {CnotStyle::hcsdg, Fix{{"h"}, {"sdg", "sdg"}, {"h"}},
                Fix{{}, {"sdg", "sdg"}, {}}};
    }
    throw std::invalid_argument("unknown teleport variant");
}

const char *variant_name(int index) {
    static const char *names[] = {"a", "b", "c", "d", "e"};
    return names[index];
}

} // namespace

Circuit bell_pair(BellVariant variant) {
    Circuit c{2, {}};
    add(c, "h", {0});
    switch (variant) {
    case BellVariant::a:
        add(c, "cx", {0, 1});
        break;
    case BellVariant::b:
        append_fourier_cnot(c, 0, 1);
        break;
    case BellVariant::c:
        append_hcsdg_cnot(c, 0, 1);
        break;
    }
    return c;
}

Circuit ghz(int n, GhzVariant variant) {
    if (n != 3 && n != 4) {
        throw std::invalid_argument("ghz: qubit count must be 3 or 4");
    }
    const CnotStyle style = variant == GhzVariant::a   ? CnotStyle::direct
                            : variant == GhzVariant::b ? CnotStyle::fourier
                                                       : CnotStyle::hcsdg;
    Circuit c{n, {}};
    add(c, "h", {0});
    for (int t = 1; t < n; ++t) {
        append_cnot(c, 0, t, style);
    }
    return c;
}

ProtocolResult teleport(const PureState &input, TeleportVariant variant) {
    if (input.n_qubits != 1) {
        throw std::invalid_argument("teleport: input must be a 1-qubit state");
    }
    require_normalized(input);
    const TeleportVocab vocab = teleport_vocab(variant);

    // Wires: 0 input, 1-2 Bell pair, output on 2.
    Circuit c{3, {}};
    add(c, "h", {1});
    append_cnot(c, 1, 2, vocab.cnot);
    append_cnot(c, 0, 1, vocab.cnot);
    add(c, "h", {0});

    PureState joint{3, ComplexVector(8)};
    for (std::size_t i = 0; i < 2; ++i) {
        joint.amplitudes[i] = input.amplitudes[i];
    }

    const PureState final_state = apply(c, joint);
    ProtocolResult result;
    result.variant = variant_name(static_cast<int>(variant));
    for (const Branch &branch : measure(final_state, {0, 1})) {
        PureState corrected = branch.post_state;
        corrected = apply(fix_circuit(vocab.x_fix, branch.outcome[1] == 1), corrected);
        corrected = apply(fix_circuit(vocab.z_fix, branch.outcome[0] == 1), corrected);
        const double f = fidelity(input, corrected);
        result.branches.push_back(
            ProtocolBranch{branch.outcome, branch.probability, std::move(corrected), f});
    }
    return result;
}

ProtocolResult qss(const PureState &input, int parties, QssVariant variant) {
    if (input.n_qubits != 1) {
        throw std::invalid_argument("qss: input must be a 1-qubit state");
    }
    if (parties != 3 && parties != 4) {
        throw std::invalid_argument("qss: parties must be 3 or 4");
    }
    require_normalized(input);

    CnotStyle style = CnotStyle::direct;
    // Correction vocabularies: the traditional X/Z, the CZ -> {H, CNOT}
    // conjugation, its simplification, the Fourier spelling, and the
    // {H, S^-1} spelling.
    std::vector<std::string> x_ops = {"x"};
    std::vector<std::string> z_ops = {"z"};
    switch (variant) {
    case QssVariant::a:
        break;
    case QssVariant::b:
        z_ops = {"h", "x", "h"};
        break;
    case QssVariant::c:
        break;
    case QssVariant::d:
        style = CnotStyle::fourier;
        z_ops = {"h", "x", "h"};
        break;
    case QssVariant::e:
        style = CnotStyle::hcsdg;
        x_ops = {"h", "sdg", "sdg", "h"};
        z_ops = {"sdg", "sdg"};
        break;
    }

    const int n_wires = parties + 1;
    Circuit c{n_wires, {}};
    // GHZ resource over wires 1..parties.
    add(c, "h", {1});
    for (int t = 2; t <= parties; ++t) {
        append_cnot(c, 1, t, style);
    }
    // Dealer's Bell rotation on (0, 1).
    append_cnot(c, 0, 1, style);
    add(c, "h", {0});
    // Intermediate parties measure in the X basis.
    for (int w = 2; w < parties; ++w) {
        add(c, "h", {w});
    }

    PureState joint{n_wires, ComplexVector(std::size_t{1} << n_wires)};
    for (std::size_t i = 0; i < 2; ++i) {
        joint.amplitudes[i] = input.amplitudes[i];
    }
    const PureState final_state = apply(c, joint);

    std::vector<QubitIndex> measured;
    for (int w = 0; w < parties; ++w) {
        measured.push_back(w);
    }

    // Candidate corrections {I, X, Z, XZ} in the variant's spelling; the
    // per-branch rule is whichever maximizes fidelity with the secret.
    std::vector<std::vector<std::string>> candidates;
    candidates.push_back({});
    candidates.push_back(x_ops);
    candidates.push_back(z_ops);
    std::vector<std::string> xz = x_ops;
    xz.insert(xz.end(), z_ops.begin(), z_ops.end());
    candidates.push_back(std::move(xz));

    ProtocolResult result;
    result.variant = variant_name(static_cast<int>(variant));
    for (const Branch &branch : measure(final_state, measured)) {
        PureState best_state = branch.post_state;
        double best_fidelity = -1.0;
        for (const auto &candidate : candidates) {
            PureState corrected = apply(ops_circuit(candidate), branch.post_state);
            const double f = fidelity(input, corrected);
            if (f > best_fidelity + 1e-12) {
                best_fidelity = f;
                best_state = std::move(corrected);
            }
        }
        result.branches.push_back(ProtocolBranch{branch.outcome, branch.probability,
                                                 std::move(best_state), best_fidelity});
    }
    return result;
}

std::string outcome_string(const std::vector<int> &outcome) {
    std::string s;
    s.reserve(outcome.size());
    for (auto it = outcome.rbegin(); it != outcome.rend(); ++it) {
        s += (*it != 0) ? '1' : '0';
    }
    return s;
}

nlohmann::json branches_to_json(const ProtocolResult &result) {
    nlohmann::json out = nlohmann::json::array();
    for (const ProtocolBranch &b : result.branches) {
        nlohmann::json amps = nlohmann::json::array();
        for (const Complex &z : b.post_state.amplitudes) {
            amps.push_back({{"re", z.real()}, {"im", z.imag()}});
        }
        out.push_back({{"outcome", outcome_string(b.outcome)},
                       {"probability", b.probability},
                       {"post_state", std::move(amps)},
                       {"fidelity", b.fidelity}});
    }
    return out;
}

} // namespace fqc
