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

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "fqc/circuit.hpp"
#include "fqc/complex_matrix.hpp"
#include "fqc/state.hpp"

namespace fqc::test {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

inline ComplexMatrix random_matrix(std::size_t dim, std::mt19937 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim);
    for (Complex &z : m.entries()) {
        z = Complex{gauss(rng), gauss(rng)};
    }
    return m;
}

/// Random unitary via modified Gram-Schmidt on a Gaussian matrix. Works for
/// any dimension, not just powers of two.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937 &rng) {
    ComplexMatrix m = random_matrix(dim, rng);
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex overlap{};
            for (std::size_t r = 0; r < dim; ++r) {
                overlap += std::conj(m(r, prev)) * m(r, c);
            }
            for (std::size_t r = 0; r < dim; ++r) {
                m(r, c) -= overlap * m(r, prev);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            norm += std::norm(m(r, c));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < dim; ++r) {
            m(r, c) /= norm;
        }
    }
    return m;
}

/// Random circuit over the named catalog gates; the cheap way to make
/// random unitaries that exercise the circuit machinery itself.
inline Circuit random_circuit(int n_qubits, int n_ops, std::mt19937 &rng) {
    static const std::vector<std::string> one_qubit = {
        "x", "y", "z", "h", "s", "sdg", "t", "tdg", "u", "udg", "v", "vdg"};
    static const std::vector<std::string> two_qubit = {
        "cx", "cz", "cy", "cs", "csdg", "ct", "ch", "cv", "swap"};

    std::uniform_int_distribution<int> wire(0, n_qubits - 1);
    std::uniform_int_distribution<int> pick1(0, static_cast<int>(one_qubit.size()) - 1);
    std::uniform_int_distribution<int> pick2(0, static_cast<int>(two_qubit.size()) - 1);
    std::bernoulli_distribution two(n_qubits > 1 ? 0.5 : 0.0);

    Circuit c{n_qubits, {}};
    for (int i = 0; i < n_ops; ++i) {
        if (two(rng)) {
            int a = wire(rng);
            int b = wire(rng);
            while (b == a) {
                b = wire(rng);
            }
            add(c, two_qubit[pick2(rng)], {a, b});
        } else {
            add(c, one_qubit[pick1(rng)], {wire(rng)});
        }
    }
    return c;
}

inline PureState random_state(int n_qubits, std::mt19937 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    PureState s{n_qubits, ComplexVector(std::size_t{1} << n_qubits)};
    double norm = 0.0;
    for (Complex &z : s.amplitudes) {
        z = Complex{gauss(rng), gauss(rng)};
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    for (Complex &z : s.amplitudes) {
        z /= norm;
    }
    return s;
}

/// |<a|b>| == 1 test for state equality up to a global phase.
inline bool states_phase_equal(const PureState &a, const PureState &b, double eps = 1e-10) {
    return std::abs(fidelity(a, b) - 1.0) < eps;
}

} // namespace fqc::test
