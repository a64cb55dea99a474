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
#include "fqc/state.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fqc {

PureState basis_state(int n_qubits, std::size_t index) {
    if (n_qubits < 0 || n_qubits > 24) {
        throw std::invalid_argument("basis_state: unsupported qubit count");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    PureState s{n_qubits, ComplexVector(dim)};
    s.amplitudes[index] = 1.0;
    return s;
}

PureState apply(const Circuit &c, const PureState &s) {
    if (c.n_qubits != s.n_qubits) {
        throw std::invalid_argument("apply: circuit and state widths differ");
    }
    validate(c);
    PureState out = s;
    for (const CircuitOp &op : c.ops) {
        apply_op(op, c.n_qubits, out.amplitudes.data(), 1);
    }
    const double norm = vector_norm(out.amplitudes);
    if (norm > 0.0) {
        for (Complex &z : out.amplitudes) {
            z /= norm;
        }
    }
    return out;
}

std::vector<Branch> measure(const PureState &s, const std::vector<QubitIndex> &qubits) {
    const std::size_t k = qubits.size();
    std::uint64_t measured_mask = 0;
    for (QubitIndex q : qubits) {
        if (q < 0 || q >= s.n_qubits) {
            throw std::invalid_argument("measure: qubit out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (measured_mask & bit) {
            throw std::invalid_argument("measure: duplicate qubit");
        }
        measured_mask |= bit;
    }

    const int n_rest = s.n_qubits - static_cast<int>(k);
    std::vector<int> rest_wires;
    for (int w = 0; w < s.n_qubits; ++w) {
        if (!(measured_mask & (std::uint64_t{1} << w))) {
            rest_wires.push_back(w);
        }
    }

    std::vector<Branch> branches;
    const std::size_t n_outcomes = std::size_t{1} << k;
    const std::size_t rest_dim = std::size_t{1} << n_rest;
    for (std::size_t outcome = 0; outcome < n_outcomes; ++outcome) {
        std::uint64_t outcome_bits = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (outcome & (std::size_t{1} << j)) {
                outcome_bits |= std::uint64_t{1} << qubits[j];
            }
        }

        ComplexVector projected(rest_dim);
        double prob = 0.0;
        for (std::size_t r = 0; r < rest_dim; ++r) {
            std::uint64_t idx = outcome_bits;
            for (int j = 0; j < n_rest; ++j) {
                if (r & (std::size_t{1} << j)) {
                    idx |= std::uint64_t{1} << rest_wires[j];
                }
            }
            const Complex amp = s.amplitudes[idx];
            projected[r] = amp;
            prob += std::norm(amp);
        }
        if (prob <= 0.0) {
            continue;
        }

        const double scale = 1.0 / std::sqrt(prob);
        for (Complex &z : projected) {
            z *= scale;
        }
        Branch branch;
        branch.outcome.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            branch.outcome.push_back((outcome >> j) & 1);
        }
        branch.probability = prob;
        branch.post_state = PureState{n_rest, std::move(projected)};
        branches.push_back(std::move(branch));
    }
    return branches;
}

double fidelity(const PureState &a, const PureState &b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("fidelity: state widths differ");
    }
    Complex overlap{};
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
        overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return std::norm(overlap);
}

} // namespace fqc
