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
#include "fqc/circuit.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "fqc/gates.hpp"

namespace fqc {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::uint64_t wire_mask(const std::vector<QubitIndex> &wires) {
    std::uint64_t mask = 0;
    for (QubitIndex w : wires) {
        mask |= std::uint64_t{1} << w;
    }
    return mask;
}

void validate_op(const CircuitOp &op, int n_qubits) {
    const std::size_t k = op.targets.size();
    if (k == 0) {
        throw std::invalid_argument("op has no target wires");
    }
    if (!is_power_of_two(op.matrix.dim()) || op.matrix.dim() != (std::size_t{1} << k)) {
        throw std::invalid_argument("op matrix dim does not match target count");
    }
    std::uint64_t seen = 0;
    auto check_wires = [&](const std::vector<QubitIndex> &wires) {
        for (QubitIndex w : wires) {
            if (w < 0 || w >= n_qubits) {
                throw std::invalid_argument("wire index " + std::to_string(w) +
                                            " out of range for " +
                                            std::to_string(n_qubits) + " qubits");
            }
            const std::uint64_t bit = std::uint64_t{1} << w;
            if (seen & bit) {
                throw std::invalid_argument("wire index " + std::to_string(w) +
                                            " used twice in one op");
            }
            seen |= bit;
        }
    };
    check_wires(op.targets);
    check_wires(op.controls);
    check_wires(op.anti_controls);
}

struct Mnemonic {
    const char *base;
    int n_controls;
    int n_targets;
};

const std::unordered_map<std::string_view, Mnemonic> &mnemonic_table() {
    static const std::unordered_map<std::string_view, Mnemonic> table = {
        {"id", {"id", 0, 1}},       {"x", {"x", 0, 1}},
        {"y", {"y", 0, 1}},         {"z", {"z", 0, 1}},
        {"h", {"h", 0, 1}},         {"s", {"s", 0, 1}},
        {"sdg", {"sdg", 0, 1}},     {"t", {"t", 0, 1}},
        {"tdg", {"tdg", 0, 1}},     {"u", {"u", 0, 1}},
        {"udg", {"udg", 0, 1}},     {"v", {"v", 0, 1}},
        {"vdg", {"vdg", 0, 1}},     {"swap", {"swap", 0, 2}},
        {"cx", {"x", 1, 1}},        {"cz", {"z", 1, 1}},
        {"cy", {"y", 1, 1}},        {"ch", {"h", 1, 1}},
        {"cs", {"s", 1, 1}},        {"csdg", {"sdg", 1, 1}},
        {"ct", {"t", 1, 1}},        {"ctdg", {"tdg", 1, 1}},
        {"cu", {"u", 1, 1}},        {"cudg", {"udg", 1, 1}},
        {"cv", {"v", 1, 1}},        {"cvdg", {"vdg", 1, 1}},
        {"ccx", {"x", 2, 1}},       {"cswap", {"swap", 1, 2}},
        {"peres", {"peres", 0, 3}}, {"miller", {"miller", 0, 3}},
    };
    return table;
}

const std::unordered_map<std::string_view, std::string_view> &inverse_names() {
    static const std::unordered_map<std::string_view, std::string_view> table = {
        {"id", "id"},   {"x", "x"},     {"y", "y"},    {"z", "z"},
        {"h", "h"},     {"s", "sdg"},   {"sdg", "s"},  {"t", "tdg"},
        {"tdg", "t"},   {"u", "udg"},   {"udg", "u"},  {"v", "vdg"},
        {"vdg", "v"},   {"swap", "swap"}, {"miller", "miller"},
    };
    return table;
}

} // namespace

void validate(const Circuit &c) {
    if (c.n_qubits < 0) {
        throw std::invalid_argument("negative qubit count");
    }
    for (const CircuitOp &op : c.ops) {
        validate_op(op, c.n_qubits);
    }
}

void apply_op(const CircuitOp &op, int n_qubits, Complex *amplitudes,
              std::size_t stride) {
    const std::size_t k = op.targets.size();
    const std::size_t block = std::size_t{1} << k;
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    const std::uint64_t target_mask = wire_mask(op.targets);
    const std::uint64_t control_mask = wire_mask(op.controls);
    const std::uint64_t anti_mask = wire_mask(op.anti_controls);

    // offset[l] = basis offset of local pattern l spread over the targets
    std::vector<std::uint64_t> offset(block, 0);
    for (std::size_t l = 0; l < block; ++l) {
        for (std::size_t j = 0; j < k; ++j) {
            if (l & (std::size_t{1} << j)) {
                offset[l] |= std::uint64_t{1} << op.targets[j];
            }
        }
    }

    std::vector<Complex> in(block), out(block);
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & target_mask) {
            continue;
        }
        if ((base & control_mask) != control_mask) {
            continue;
        }
        if (base & anti_mask) {
            continue;
        }
        for (std::size_t l = 0; l < block; ++l) {
            in[l] = amplitudes[(base | offset[l]) * stride];
        }
        for (std::size_t r = 0; r < block; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < block; ++c) {
                acc += op.matrix(r, c) * in[c];
            }
            out[r] = acc;
        }
        for (std::size_t l = 0; l < block; ++l) {
            amplitudes[(base | offset[l]) * stride] = out[l];
        }
    }
}

ComplexMatrix unitary_of(const Circuit &c) {
    validate(c);
    if (c.n_qubits > kMaxUnitaryQubits) {
        throw std::invalid_argument("unitary expansion limited to " +
                                    std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    ComplexMatrix u = ComplexMatrix::identity(dim);
    for (const CircuitOp &op : c.ops) {
        for (std::size_t col = 0; col < dim; ++col) {
            apply_op(op, c.n_qubits, &u.entries()[col], dim);
        }
    }
    return u;
}

ComplexMatrix embed(const ComplexMatrix &gate, const std::vector<QubitIndex> &wires,
                    int n_qubits) {
    const std::size_t k = wires.size();
    if (n_qubits <= 0 || n_qubits > kMaxUnitaryQubits) {
        throw std::invalid_argument("embed: unsupported qubit count");
    }
    if (gate.dim() != (std::size_t{1} << k)) {
        throw std::invalid_argument("embed: gate dim does not match wire count");
    }
    std::uint64_t seen = 0;
    for (QubitIndex w : wires) {
        if (w < 0 || w >= n_qubits) {
            throw std::invalid_argument("embed: wire out of range");
        }
        if (seen & (std::uint64_t{1} << w)) {
            throw std::invalid_argument("embed: duplicate wire");
        }
        seen |= std::uint64_t{1} << w;
    }

    // Pad with identity on the high bits, then conjugate by the wire
    // permutation. bit_map[j] = wire carried by local bit j of the padding.
    std::vector<int> bit_map(n_qubits);
    for (std::size_t j = 0; j < k; ++j) {
        bit_map[j] = wires[j];
    }
    std::size_t next = k;
    for (int w = 0; w < n_qubits; ++w) {
        if (!(seen & (std::uint64_t{1} << w))) {
            bit_map[next++] = w;
        }
    }

    const std::size_t dim = std::size_t{1} << n_qubits;
    const ComplexMatrix padded =
        kron(ComplexMatrix::identity(dim >> k), gate);

    std::vector<std::uint64_t> perm(dim);
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        std::uint64_t mapped = 0;
        for (int j = 0; j < n_qubits; ++j) {
            if (idx & (std::uint64_t{1} << j)) {
                mapped |= std::uint64_t{1} << bit_map[j];
            }
        }
        perm[idx] = mapped;
    }

    ComplexMatrix out(dim);
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            const Complex v = padded(r, c);
            if (v != Complex{}) {
                out(perm[r], perm[c]) = v;
            }
        }
    }
    return out;
}

ComplexMatrix with_controls(const ComplexMatrix &gate, int n_controls,
                            int n_anti_controls) {
    if (n_controls < 0 || n_anti_controls < 0) {
        throw std::invalid_argument("with_controls: negative control count");
    }
    const std::size_t gd = gate.dim();
    const std::size_t extra = std::size_t{1} << (n_controls + n_anti_controls);
    const std::size_t dim = gd * extra;
    // Controls occupy the bits directly above the gate block, anti-controls
    // the bits above those; the block fires on controls all-1, antis all-0.
    const std::size_t fire = ((std::size_t{1} << n_controls) - 1);

    ComplexMatrix out = ComplexMatrix::identity(dim);
    const std::size_t base = fire * gd;
    for (std::size_t r = 0; r < gd; ++r) {
        for (std::size_t c = 0; c < gd; ++c) {
            out(base + r, base + c) = gate(r, c);
        }
    }
    return out;
}

Circuit compose(const Circuit &a, const Circuit &b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("compose: circuit widths differ");
    }
    Circuit out = a;
    out.ops.insert(out.ops.end(), b.ops.begin(), b.ops.end());
    return out;
}

Circuit inverse_of(const Circuit &c) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    out.ops.reserve(c.ops.size());
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
        CircuitOp op = *it;
        const auto &names = inverse_names();
        if (auto found = names.find(op.gate); found != names.end()) {
            op.gate = std::string(found->second);
            op.matrix = GateCatalog::instance().at(op.gate).matrix;
        } else {
            op.gate.clear();
            op.matrix = dagger(op.matrix);
        }
        out.ops.push_back(std::move(op));
    }
    return out;
}

Circuit flipped_cnot() {
    Circuit c{2, {}};
    add(c, "h", {0});
    add(c, "h", {1});
    add(c, "cx", {0, 1});
    add(c, "h", {0});
    add(c, "h", {1});
    return c;
}

std::vector<Circuit> swap_constructions() {
    std::vector<Circuit> forms;

    Circuit cnot3{2, {}};
    add(cnot3, "cx", {0, 1});
    add(cnot3, "cx", {1, 0});
    add(cnot3, "cx", {0, 1});
    forms.push_back(std::move(cnot3));

    Circuit hadamard_form{2, {}};
    add(hadamard_form, "cx", {0, 1});
    add(hadamard_form, "h", {0});
    add(hadamard_form, "h", {1});
    add(hadamard_form, "cx", {0, 1});
    add(hadamard_form, "h", {0});
    add(hadamard_form, "h", {1});
    add(hadamard_form, "cx", {0, 1});
    forms.push_back(std::move(hadamard_form));

    // All-Fourier form: the H-conjugated construction with every CNOT spelled
    // as the swap-free double inverse-Fourier ladder.
    Circuit fourier_form{2, {}};
    auto add_fourier_cnot = [&](QubitIndex control, QubitIndex target) {
        add(fourier_form, "h", {target});
        add(fourier_form, "csdg", {control, target});
        add(fourier_form, "h", {control});
        add(fourier_form, "h", {control});
        add(fourier_form, "csdg", {control, target});
        add(fourier_form, "h", {target});
    };
    add_fourier_cnot(0, 1);
    add(fourier_form, "h", {0});
    add(fourier_form, "h", {1});
    add_fourier_cnot(0, 1);
    add(fourier_form, "h", {0});
    add(fourier_form, "h", {1});
    add_fourier_cnot(0, 1);
    forms.push_back(std::move(fourier_form));

    return forms;
}

CircuitOp op_from_mnemonic(std::string_view mnemonic,
                           const std::vector<QubitIndex> &wires,
                           const std::vector<bool> &anti) {
    const auto &table = mnemonic_table();
    const auto found = table.find(mnemonic);
    if (found == table.end()) {
        throw std::invalid_argument("unknown gate mnemonic: " + std::string(mnemonic));
    }
    const Mnemonic &m = found->second;
    const std::size_t expected = static_cast<std::size_t>(m.n_controls + m.n_targets);
    if (wires.size() != expected) {
        throw std::invalid_argument(std::string(mnemonic) + " takes " +
                                    std::to_string(expected) + " wires, got " +
                                    std::to_string(wires.size()));
    }
    if (!anti.empty() && anti.size() != wires.size()) {
        throw std::invalid_argument("anti flag list does not match wire list");
    }

    CircuitOp op;
    op.gate = m.base;
    op.matrix = GateCatalog::instance().at(m.base).matrix;
    for (std::size_t i = 0; i < wires.size(); ++i) {
        const bool is_control = i < static_cast<std::size_t>(m.n_controls);
        const bool is_anti = !anti.empty() && anti[i];
        if (is_anti && !is_control) {
            throw std::invalid_argument("anti-control marker on a target wire of " +
                                        std::string(mnemonic));
        }
        if (is_control) {
            (is_anti ? op.anti_controls : op.controls).push_back(wires[i]);
        } else {
            op.targets.push_back(wires[i]);
        }
    }
    return op;
}

std::optional<std::string> mnemonic_of(const CircuitOp &op) {
    if (op.gate.empty()) {
        return std::nullopt;
    }
    const std::size_t n_controls = op.controls.size() + op.anti_controls.size();
    for (const auto &[name, m] : mnemonic_table()) {
        if (m.base == op.gate && static_cast<std::size_t>(m.n_controls) == n_controls &&
            static_cast<std::size_t>(m.n_targets) == op.targets.size()) {
            return std::string(name);
        }
    }
    return std::nullopt;
}

Circuit &add(Circuit &c, std::string_view mnemonic, std::vector<QubitIndex> wires,
             std::vector<bool> anti) {
    c.ops.push_back(op_from_mnemonic(mnemonic, wires, anti));
    return c;
}

} // namespace fqc
