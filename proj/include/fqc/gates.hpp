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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fqc/complex_matrix.hpp"

namespace fqc {

enum class Provenance { literal, derived_recipe };

/// Named gate with its canonical matrix.
struct GateDef {
    std::string name;
    int arity = 1;
    ComplexMatrix matrix;
    Provenance provenance = Provenance::literal;
};

enum class CnotOrientation {
    control_q1_target_q0, // swaps basis indices 2 and 3
    control_q0_target_q1, // swaps basis indices 1 and 3
};

/// I, X, Z, Y built from the Hadamard matrix by products and flips:
/// I = HH, X = flip_h(I), Z = HXH, Y = i*flip_h(Z). Throws std::logic_error
/// if a recipe fails to reproduce its textbook literal.
std::array<GateDef, 4> pauli_from_hadamard();

/// S, S^-1, T, T^-1, U, U^-1: diag(1, e^{+-i pi/2}), diag(1, e^{+-i pi/4}),
/// diag(1, e^{+-i pi/8}).
std::array<GateDef, 6> phase_gates();

/// V = sqrt(X) and its inverse; the recipe HTTH must reproduce the literal.
std::array<GateDef, 2> sqrt_not_gates();

GateDef cnot(CnotOrientation orientation);
GateDef sqrt_cnot();

/// Toffoli, Fredkin, Peres, Miller (in that order).
///
/// Peres is the product of a Toffoli and a CNOT on the control pair (Toffoli
/// first in time), acting as (a, b, c) -> (a, a xor b, (a and b) xor c) on
/// local bits (0, 1, 2). Miller is the self-inverse permutation exchanging
/// local basis states 3 and 4; its reference construction over
/// {Toffoli, step-over CNOT, flipped CNOT} lives in the identity catalog.
std::array<GateDef, 4> three_qubit_gates();

/// Block extension [[I, 0], [0, u]]: the control is the high-index qubit of
/// the local block. Throws std::invalid_argument on non-unitary input.
ComplexMatrix controlled(const ComplexMatrix &u, Tolerance tol = {});

/// Block extension [[u, 0], [0, I]]: fires when the high qubit is |0>.
/// Equals controlled(u) conjugated by X on the control qubit.
ComplexMatrix anti_controlled(const ComplexMatrix &u, Tolerance tol = {});

/// Immutable registry of every named gate, keyed by identifier. Built once;
/// lookups are read-only and thread-safe.
class GateCatalog {
  public:
    static const GateCatalog &instance();

    /// nullptr when the name is unknown.
    const GateDef *find(std::string_view name) const;

    /// Throws std::out_of_range for unknown names.
    const GateDef &at(std::string_view name) const;

    /// All entries in registration order.
    const std::vector<GateDef> &all() const { return gates_; }

  private:
    GateCatalog();
    std::vector<GateDef> gates_;
};

} // namespace fqc
