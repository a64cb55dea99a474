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
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqc/complex_matrix.hpp"

namespace fqc {

using QubitIndex = int;

/// One gate application. `matrix` is the base gate over the target wires
/// only (dim 2^targets.size()); controls and anti-controls are kept
/// symbolic. `gate` names the base gate in the catalog, or is empty for an
/// inline matrix.
struct CircuitOp {
    std::string gate;
    ComplexMatrix matrix;
    std::vector<QubitIndex> targets;
    std::vector<QubitIndex> controls;
    std::vector<QubitIndex> anti_controls;

    bool operator==(const CircuitOp &other) const = default;
};

/// Ordered gate list over n_qubits wires. Ops are listed in temporal order;
/// expansion multiplies later ops on the left.
///
/// Qubit convention is little-endian throughout: basis index
/// b = sum_k q_k * 2^k, so q0 is the least significant bit and a gate on q0
/// of a 2-qubit system expands as I (x) G. Under this convention a CNOT with
/// control q0 / target q1 swaps amplitude indices 1 and 3.
struct Circuit {
    int n_qubits = 0;
    std::vector<CircuitOp> ops;

    bool operator==(const Circuit &other) const = default;
};

/// Unitary expansion limit; 2^12 x 2^12 dense is the largest supported.
inline constexpr int kMaxUnitaryQubits = 12;

/// Throws std::invalid_argument if any op is malformed for the circuit
/// width (out-of-range wires, overlapping wire sets, bad matrix dim).
void validate(const Circuit &c);

/// Product of the embedded op matrices in application order.
ComplexMatrix unitary_of(const Circuit &c);

/// Applies one op to raw amplitudes (stride between consecutive basis
/// indices); the building block behind unitary_of and state application.
void apply_op(const CircuitOp &op, int n_qubits, Complex *amplitudes,
              std::size_t stride);

/// 2^n unitary acting as `gate` on the named wires (wires[j] carries local
/// bit j) and as identity elsewhere, implemented as permutation-conjugated
/// Kronecker padding.
ComplexMatrix embed(const ComplexMatrix &gate, const std::vector<QubitIndex> &wires,
                    int n_qubits);

/// Block extension of a k-qubit gate by `n_controls` control bits directly
/// above the gate's bits and `n_anti_controls` anti-control bits above
/// those. Anti-controls fire on |0>, i.e. X-conjugation of an ordinary
/// control.
ComplexMatrix with_controls(const ComplexMatrix &gate, int n_controls,
                            int n_anti_controls = 0);

/// Concatenation: ops of `a`, then ops of `b`. Widths must match.
Circuit compose(const Circuit &a, const Circuit &b);

/// Reversed op order with each gate replaced by its dagger. Named phase
/// gates map to their named inverses (s <-> sdg and so on); gates without a
/// named inverse become inline matrices.
Circuit inverse_of(const Circuit &c);

/// 2-qubit circuit (H (x) H) CNOT (H (x) H), whose unitary is the CNOT with
/// control and target exchanged.
Circuit flipped_cnot();

/// The three SWAP constructions: {CNOT, flipped CNOT, CNOT}, the
/// H-conjugated middle form, and the all-Fourier form. Each has unitary
/// equal to SWAP.
std::vector<Circuit> swap_constructions();

/// Op from a DSL-style mnemonic ("h", "cx", "ccx", "cswap", ...). Wires are
/// listed controls-first, targets last; anti[i] marks listed wire i as an
/// anti-control (only valid in a control position). Throws
/// std::invalid_argument on unknown mnemonics or arity mismatch.
CircuitOp op_from_mnemonic(std::string_view mnemonic,
                           const std::vector<QubitIndex> &wires,
                           const std::vector<bool> &anti = {});

/// Mnemonic for an op, or nullopt when the op has no DSL spelling (inline
/// matrix, or a control pattern without a named form).
std::optional<std::string> mnemonic_of(const CircuitOp &op);

/// Appends a mnemonic-built op; returns the circuit for chaining.
Circuit &add(Circuit &c, std::string_view mnemonic, std::vector<QubitIndex> wires,
             std::vector<bool> anti = {});

} // namespace fqc
