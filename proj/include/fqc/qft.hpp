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

#include "fqc/circuit.hpp"
#include "fqc/complex_matrix.hpp"

namespace fqc {

inline constexpr int kMaxQftQubits = 12;

struct QftSpec {
    int n = 1;
    bool inverse = false;
    bool include_final_swaps = true;
};

/// Fourier matrix over n qubits: entry (v, u) = w^{u*v} / sqrt(2^n) with
/// w = e^{i 2 pi / 2^n}. n = 0 gives the 1x1 identity.
ComplexMatrix qft_matrix(int n);

/// Conjugate-exponent counterpart; equals dagger(qft_matrix(n)).
ComplexMatrix iqft_matrix(int n);

/// Hadamard + controlled-phase ladder, with the qubit-reversal SWAPs at the
/// end when requested. Phase gates are s/t/u for wire distances 1/2/3 and
/// generated controlled-diag(1, e^{i pi/2^d}) ops beyond that; the inverse
/// form conjugates every phase. Matches qft_matrix / iqft_matrix up to a
/// global phase; without the final swaps it differs from the matrix by
/// exactly the bit-reversal permutation.
Circuit qft_circuit(const QftSpec &spec);

/// Swap-free circuit for the squared Fourier matrix (the composition
/// cancels the qubit-reversal swaps): the phase ladder followed by the same
/// ladder with the wire order reversed. Requires 2 <= n <= 4.
Circuit qft_squared_circuit(int n, bool inverse);

/// The ladder ops of the squared form laid onto two arbitrary wires; its
/// unitary is the CNOT with the given control and target. This is the
/// Fourier spelling of CNOT used by the protocol and identity builders.
void append_fourier_cnot(Circuit &c, QubitIndex control, QubitIndex target,
                         bool inverse = true);

/// Bit-reversal permutation matrix over n qubits.
ComplexMatrix bit_reversal_permutation(int n);

} // namespace fqc
