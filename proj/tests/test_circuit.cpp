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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fqc/circuit.hpp"
#include "fqc/gates.hpp"
#include "fqc/qft.hpp"

#include "test_support.hpp"

using namespace fqc;

namespace {

const ComplexMatrix &g(std::string_view name) {
    return GateCatalog::instance().at(name).matrix;
}

/// Truth-table oracle for a CNOT between arbitrary wires: builds the
/// permutation directly from the bit action, no Kronecker machinery.
ComplexMatrix cnot_permutation(int control, int target, int n) {
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t out = idx;
        if (idx & (std::size_t{1} << control)) {
            out ^= std::size_t{1} << target;
        }
        m(out, idx) = 1.0;
    }
    return m;
}

} // namespace

TEST_CASE("unitary_of fixes the little-endian convention") {
    Circuit h_on_q0{2, {}};
    add(h_on_q0, "h", {0});
    CHECK(frobenius_distance(unitary_of(h_on_q0),
                             kron(ComplexMatrix::identity(2), g("h"))) < 1e-15);

    Circuit cx{2, {}};
    add(cx, "cx", {0, 1});
    const ComplexMatrix eq8(4, {1, 0, 0, 0, //
                                0, 0, 0, 1, //
                                0, 0, 1, 0, //
                                0, 1, 0, 0});
    CHECK(frobenius_distance(unitary_of(cx), eq8) < 1e-15);

    CHECK(unitary_of(Circuit{3, {}}) == ComplexMatrix::identity(8));
}

TEST_CASE("ops apply in time order, later ops on the left") {
    std::mt19937 rng(51);
    const Circuit a = fqc::test::random_circuit(3, 8, rng);
    const Circuit b = fqc::test::random_circuit(3, 8, rng);
    const ComplexMatrix composed = unitary_of(compose(a, b));
    CHECK(frobenius_distance(composed, unitary_of(b) * unitary_of(a)) < 1e-12);
}

TEST_CASE("embed matches the brute-force permutation for the step-over cnot") {
    const ComplexMatrix stepped = embed(g("cx"), {0, 2}, 3);
    CHECK(frobenius_distance(stepped, cnot_permutation(0, 2, 3)) < 1e-15);
    // Exchanges 1 <-> 5 and 3 <-> 7.
    CHECK(stepped(5, 1) == Complex{1});
    CHECK(stepped(7, 3) == Complex{1});

    const ComplexMatrix flipped = embed(g("cx"), {2, 0}, 3);
    CHECK(frobenius_distance(flipped, cnot_permutation(2, 0, 3)) < 1e-15);
}

TEST_CASE("embed on the low wires is plain padding") {
    std::mt19937 rng(53);
    const ComplexMatrix u = fqc::test::random_unitary(4, rng);
    CHECK(frobenius_distance(embed(u, {0, 1}, 3), kron(ComplexMatrix::identity(2), u)) <
          1e-15);
}

TEST_CASE("embed of swap") {
    const ComplexMatrix expected(4, {1, 0, 0, 0, //
                                     0, 0, 1, 0, //
                                     0, 1, 0, 0, //
                                     0, 0, 0, 1});
    CHECK(embed(g("swap"), {0, 1}, 2) == expected);
}

TEST_CASE("embed validates wires") {
    CHECK_THROWS_AS(embed(g("cx"), {0, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(embed(g("cx"), {0, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(embed(g("cx"), {0}, 3), std::invalid_argument);
}

TEST_CASE("embed preserves unitarity and agrees with op application") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + (trial % 2);
        const ComplexMatrix u = fqc::test::random_unitary(4, rng);
        std::vector<int> wires(n);
        for (int i = 0; i < n; ++i) {
            wires[i] = i;
        }
        std::shuffle(wires.begin(), wires.end(), rng);
        wires.resize(2);

        const ComplexMatrix embedded = embed(u, wires, n);
        CHECK(is_unitary(embedded, Tolerance{1e-11}));

        // The same action through the column-apply path.
        Circuit c{n, {}};
        CircuitOp op;
        op.matrix = u;
        op.targets = wires;
        c.ops.push_back(op);
        CHECK(frobenius_distance(unitary_of(c), embedded) < 1e-12);
    }
}

TEST_CASE("with_controls block extension") {
    // Control on the high bit: the local form of a controlled-X.
    const ComplexMatrix cx_high = with_controls(g("x"), 1);
    CHECK(frobenius_distance(cx_high, controlled(g("x"))) < 1e-15);

    const ComplexMatrix toffoli_high = with_controls(g("x"), 2);
    ComplexMatrix expected = ComplexMatrix::identity(8);
    expected(6, 6) = expected(7, 7) = 0.0;
    expected(6, 7) = expected(7, 6) = 1.0;
    CHECK(toffoli_high == expected);

    CHECK(frobenius_distance(with_controls(g("x"), 0, 1), anti_controlled(g("x"))) <
          1e-15);
    // Rewired onto (target, controls...) order this is the catalog Toffoli.
    CHECK(frobenius_distance(embed(with_controls(g("x"), 2), {2, 0, 1}, 3), g("ccx")) <
          1e-15);
}

TEST_CASE("ops with control fields match the catalog block matrices") {
    Circuit via_controls{3, {}};
    add(via_controls, "ccx", {0, 1, 2});
    CHECK(frobenius_distance(unitary_of(via_controls), embed(g("ccx"), {0, 1, 2}, 3)) <
          1e-14);

    Circuit anti{2, {}};
    anti.ops.push_back(op_from_mnemonic("cx", {0, 1}, {true, false}));
    Circuit conjugated{2, {}};
    add(conjugated, "x", {0});
    add(conjugated, "cx", {0, 1});
    add(conjugated, "x", {0});
    CHECK(frobenius_distance(unitary_of(anti), unitary_of(conjugated)) < 1e-14);
}

TEST_CASE("compose rejects width mismatch") {
    CHECK_THROWS_AS(compose(Circuit{2, {}}, Circuit{3, {}}), std::invalid_argument);
}

TEST_CASE("inverse_of undoes random circuits") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 4; // up to 5 qubits
        const Circuit c = fqc::test::random_circuit(n, 20, rng);
        const ComplexMatrix round_trip = unitary_of(compose(c, inverse_of(c)));
        CHECK(frobenius_distance(round_trip, ComplexMatrix::identity(round_trip.dim())) <
              1e-10);
        CHECK(frobenius_distance(unitary_of(inverse_of(c)), dagger(unitary_of(c))) <
              1e-10);
    }
}

TEST_CASE("inverse_of maps named phase gates to their named inverses") {
    Circuit c{1, {}};
    add(c, "s", {0});
    add(c, "t", {0});
    add(c, "u", {0});
    add(c, "v", {0});
    const Circuit inv = inverse_of(c);
    REQUIRE(inv.ops.size() == 4);
    CHECK(inv.ops[0].gate == "vdg");
    CHECK(inv.ops[1].gate == "udg");
    CHECK(inv.ops[2].gate == "tdg");
    CHECK(inv.ops[3].gate == "sdg");

    CHECK(inverse_of(Circuit{2, {}}) == Circuit{2, {}});

    const Circuit inv_qft = inverse_of(qft_circuit({3, false, true}));
    CHECK(dist_up_to_phase(unitary_of(inv_qft), iqft_matrix(3)).distance < 1e-10);
}

TEST_CASE("flipped cnot exchanges the wire roles") {
    const ComplexMatrix flipped = unitary_of(flipped_cnot());
    ComplexMatrix expected = ComplexMatrix::identity(4);
    expected(2, 2) = expected(3, 3) = 0.0;
    expected(2, 3) = expected(3, 2) = 1.0;
    CHECK(frobenius_distance(flipped, expected) < 1e-13);
    CHECK(frobenius_distance(flipped, embed(g("cx"), {1, 0}, 2)) < 1e-13);
    CHECK(frobenius_distance(flipped * flipped, ComplexMatrix::identity(4)) < 1e-13);
}

TEST_CASE("swap constructions all equal the swap") {
    const auto forms = swap_constructions();
    REQUIRE(forms.size() == 3);
    for (const Circuit &form : forms) {
        CHECK(frobenius_distance(unitary_of(form), g("swap")) < 1e-13);
    }
    CHECK(frobenius_distance(g("swap") * g("swap"), ComplexMatrix::identity(4)) < 1e-15);

    std::mt19937 rng(67);
    const ComplexMatrix a = fqc::test::random_unitary(2, rng);
    const ComplexMatrix b = fqc::test::random_unitary(2, rng);
    CHECK(frobenius_distance(g("swap") * kron(a, b) * g("swap"), kron(b, a)) < 1e-12);
}

TEST_CASE("validate rejects malformed ops") {
    Circuit out_of_range{2, {}};
    add(out_of_range, "h", {0});
    out_of_range.ops[0].targets = {2};
    CHECK_THROWS_AS(validate(out_of_range), std::invalid_argument);

    Circuit overlap{2, {}};
    CircuitOp op = op_from_mnemonic("cx", {0, 1});
    op.controls = {1}; // collides with the target
    overlap.ops.push_back(op);
    CHECK_THROWS_AS(validate(overlap), std::invalid_argument);

    Circuit bad_dim{2, {}};
    CircuitOp wide;
    wide.matrix = ComplexMatrix::identity(4);
    wide.targets = {0};
    bad_dim.ops.push_back(wide);
    CHECK_THROWS_AS(validate(bad_dim), std::invalid_argument);
}

TEST_CASE("unitary expansion caps the width") {
    CHECK_THROWS_AS(unitary_of(Circuit{13, {}}), std::invalid_argument);
}

TEST_CASE("mnemonic round trip") {
    const CircuitOp op = op_from_mnemonic("cswap", {2, 0, 1});
    CHECK(op.gate == "swap");
    CHECK(op.controls == std::vector<QubitIndex>{2});
    CHECK(op.targets == std::vector<QubitIndex>{0, 1});
    CHECK(mnemonic_of(op) == std::string("cswap"));

    CircuitOp inline_op;
    inline_op.matrix = ComplexMatrix::identity(2);
    inline_op.targets = {0};
    CHECK_FALSE(mnemonic_of(inline_op).has_value());

    CHECK_THROWS_AS(op_from_mnemonic("bogus", {0}), std::invalid_argument);
    CHECK_THROWS_AS(op_from_mnemonic("cx", {0}), std::invalid_argument);
    CHECK_THROWS_AS(op_from_mnemonic("x", {0}, {true}), std::invalid_argument);
}
