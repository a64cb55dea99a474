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

#include <vector>

#include "fqc/circuit.hpp"
#include "fqc/complex_matrix.hpp"

namespace fqc {

/// Unit-norm state vector over n qubits, little-endian amplitude indexing.
struct PureState {
    int n_qubits = 0;
    ComplexVector amplitudes;

    bool operator==(const PureState &other) const = default;
};

/// |0...0> unless a basis index is given.
PureState basis_state(int n_qubits, std::size_t index = 0);

/// One measurement outcome: outcome[i] is the observed bit of the i-th
/// measured qubit, and post_state lives on the unmeasured qubits (relative
/// order preserved). Zero-probability outcomes are omitted.
struct Branch {
    std::vector<int> outcome;
    double probability = 0.0;
    PureState post_state;
};

/// Circuit action on a state; renormalized only to absorb rounding. Throws
/// std::invalid_argument when widths differ.
PureState apply(const Circuit &c, const PureState &s);

/// Full branch enumeration of a computational-basis measurement of the
/// given qubits. Deterministic order: outcomes enumerate as a binary
/// counter with qubits[0] as its least significant bit.
std::vector<Branch> measure(const PureState &s, const std::vector<QubitIndex> &qubits);

/// |<a|b>|^2. Throws std::invalid_argument when widths differ.
double fidelity(const PureState &a, const PureState &b);

} // namespace fqc
