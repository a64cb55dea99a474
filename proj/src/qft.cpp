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
#include "fqc/qft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fqc {

namespace {

void require_range(int n, int lo, int hi, const char *what) {
    if (n < lo || n > hi) {
        throw std::invalid_argument(std::string(what) + ": qubit count " +
                                    std::to_string(n) + " out of range [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

/// Controlled phase of angle pi/2^distance between two wires. Distances 1-3
/// are the named s/t/u gates; larger distances follow the same pattern as
/// generated inline gates.
void append_controlled_phase(Circuit &c, QubitIndex control, QubitIndex target,
                             int distance, bool inverse) {
    switch (distance) {
    case 1:
        add(c, inverse ? "csdg" : "cs", {control, target});
        return;
    case 2:
        add(c, inverse ? "ctdg" : "ct", {control, target});
        return;
    case 3:
        add(c, inverse ? "cudg" : "cu", {control, target});
        return;
    default: {
        const double angle = std::numbers::pi / static_cast<double>(1 << distance);
        CircuitOp op;
        op.matrix = ComplexMatrix(2, {1, 0, 0, std::polar(1.0, inverse ? -angle : angle)});
        op.targets = {target};
        op.controls = {control};
        c.ops.push_back(std::move(op));
        return;
    }
    }
}

/// The Hadamard/controlled-phase ladder over wire_of(0..n-1), without the
/// final qubit-reversal swaps.
template <typename WireOf>
void append_ladder(Circuit &c, int n, bool inverse, WireOf wire_of) {
    for (int k = n - 1; k >= 0; --k) {
        add(c, "h", {wire_of(k)});
        for (int j = k - 1; j >= 0; --j) {
            append_controlled_phase(c, wire_of(j), wire_of(k), k - j, inverse);
        }
    }
}

/// e-th power of the principal dim-th root of unity. Quarter turns come out
/// exact, so the 1- and 2-qubit matrices equal their closed forms entrywise.
Complex root_of_unity(std::size_t e, std::size_t dim, bool inverse) {
    e %= dim;
    if (inverse && e != 0) {
        e = dim - e;
    }
    if ((4 * e) % dim == 0) {
        switch ((4 * e) / dim) {
        case 0:
            return Complex{1, 0};
        case 1:
            return Complex{0, 1};
        case 2:
            return Complex{-1, 0};
        default:
            return Complex{0, -1};
        }
    }
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(e) /
                         static_cast<double>(dim);
    return std::polar(1.0, theta);
}

ComplexMatrix fourier(int n, bool inverse) {
    const std::size_t dim = std::size_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    ComplexMatrix m(dim);
    for (std::size_t v = 0; v < dim; ++v) {
        for (std::size_t u = 0; u < dim; ++u) {
            const Complex w = root_of_unity((u * v) % dim, dim, inverse);
            m(v, u) = Complex{scale * w.real(), scale * w.imag()};
        }
    }
    return m;
}

} // namespace

ComplexMatrix qft_matrix(int n) {
    require_range(n, 0, kMaxQftQubits, "qft_matrix");
    return fourier(n, false);
}

ComplexMatrix iqft_matrix(int n) {
    require_range(n, 0, kMaxQftQubits, "iqft_matrix");
    return fourier(n, true);
}

Circuit qft_circuit(const QftSpec &spec) {
    require_range(spec.n, 0, kMaxQftQubits, "qft_circuit");
    Circuit c{spec.n, {}};
    if (spec.n == 0) {
        return c;
    }
    append_ladder(c, spec.n, spec.inverse, [](int w) { return w; });
    if (spec.include_final_swaps) {
        for (int w = 0; w < spec.n / 2; ++w) {
            add(c, "swap", {w, spec.n - 1 - w});
        }
    }
    return c;
}

Circuit qft_squared_circuit(int n, bool inverse) {
    require_range(n, 2, 4, "qft_squared_circuit");
    Circuit c{n, {}};
    append_ladder(c, n, inverse, [](int w) { return w; });
    append_ladder(c, n, inverse, [n](int w) { return n - 1 - w; });
    return c;
}

void append_fourier_cnot(Circuit &c, QubitIndex control, QubitIndex target,
                         bool inverse) {
    const char *phase = inverse ? "csdg" : "cs";
    add(c, "h", {target});
    add(c, phase, {control, target});
    add(c, "h", {control});
    add(c, "h", {control});
    add(c, phase, {control, target});
    add(c, "h", {target});
}

ComplexMatrix bit_reversal_permutation(int n) {
    require_range(n, 0, kMaxQftQubits, "bit_reversal_permutation");
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t rev = 0;
        for (int b = 0; b < n; ++b) {
            if (idx & (std::size_t{1} << b)) {
                rev |= std::size_t{1} << (n - 1 - b);
            }
        }
        m(rev, idx) = 1.0;
    }
    return m;
}

} // namespace fqc
