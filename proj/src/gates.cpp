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
#include "fqc/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fqc {

namespace {

constexpr double kRecipeTolerance = 1e-13;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ComplexMatrix lit_identity2() { return ComplexMatrix::identity(2); }

ComplexMatrix lit_x() { return ComplexMatrix(2, {0, 1, 1, 0}); }

ComplexMatrix lit_y() {
    return ComplexMatrix(2, {0, Complex{0, -1}, Complex{0, 1}, 0});
}

ComplexMatrix lit_z() { return ComplexMatrix(2, {1, 0, 0, -1}); }

ComplexMatrix lit_h() {
    return ComplexMatrix(2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
}

ComplexMatrix phase_matrix(double angle) {
    return ComplexMatrix(2, {1, 0, 0, std::polar(1.0, angle)});
}

ComplexMatrix lit_v() {
    const Complex p{0.5, 0.5};  // (1+i)/2
    const Complex q{0.5, -0.5}; // (1+i)/2 * (-i)
    return ComplexMatrix(2, {p, q, q, p});
}

ComplexMatrix lit_v_inv() {
    const Complex p{0.5, -0.5};
    const Complex q{0.5, 0.5};
    return ComplexMatrix(2, {p, q, q, p});
}

void require_recipe_matches(const ComplexMatrix &recipe, const ComplexMatrix &literal,
                            const char *name) {
    if (frobenius_distance(recipe, literal) > kRecipeTolerance) {
        throw std::logic_error(std::string("gate recipe for ") + name +
                               " does not reproduce its literal matrix");
    }
}

/// 4x4 matrix applying u to the high qubit when the low qubit is |1>.
/// Used for the catalog's two-qubit controlled gates, whose control is q0 to
/// match the CNOT convention of the cx entry.
ComplexMatrix controlled_on_low(const ComplexMatrix &u) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m(1, 1) = u(0, 0);
    m(1, 3) = u(0, 1);
    m(3, 1) = u(1, 0);
    m(3, 3) = u(1, 1);
    return m;
}

ComplexMatrix permutation8(std::size_t a, std::size_t b) {
    ComplexMatrix m = ComplexMatrix::identity(8);
    m(a, a) = m(b, b) = 0.0;
    m(a, b) = m(b, a) = 1.0;
    return m;
}

} // namespace

std::array<GateDef, 4> pauli_from_hadamard() {
    const ComplexMatrix h = lit_h();

    const ComplexMatrix i_recipe = matmul(h, h);
    require_recipe_matches(i_recipe, lit_identity2(), "id");

    const ComplexMatrix x_recipe = flip_h(i_recipe);
    require_recipe_matches(x_recipe, lit_x(), "x");

    const ComplexMatrix z_recipe = matmul(h, matmul(x_recipe, h));
    require_recipe_matches(z_recipe, lit_z(), "z");

    const ComplexMatrix y_recipe = Complex{0, 1} * flip_h(z_recipe);
    require_recipe_matches(y_recipe, lit_y(), "y");

    return {GateDef{"id", 1, i_recipe, Provenance::derived_recipe},
            GateDef{"x", 1, x_recipe, Provenance::derived_recipe},
            GateDef{"z", 1, z_recipe, Provenance::derived_recipe},
            GateDef{"y", 1, y_recipe, Provenance::derived_recipe}};
}

std::array<GateDef, 6> phase_gates() {
    const double pi = std::numbers::pi;
    return {GateDef{"s", 1, ComplexMatrix(2, {1, 0, 0, Complex{0, 1}})},
            GateDef{"sdg", 1, ComplexMatrix(2, {1, 0, 0, Complex{0, -1}})},
            GateDef{"t", 1, phase_matrix(pi / 4)},
            GateDef{"tdg", 1, phase_matrix(-pi / 4)},
            GateDef{"u", 1, phase_matrix(pi / 8)},
            GateDef{"udg", 1, phase_matrix(-pi / 8)}};
}

std::array<GateDef, 2> sqrt_not_gates() {
    const ComplexMatrix h = lit_h();
    const ComplexMatrix t = phase_matrix(std::numbers::pi / 4);
    const ComplexMatrix tdg = phase_matrix(-std::numbers::pi / 4);

    const ComplexMatrix v_recipe = matmul(h, matmul(t, matmul(t, h)));
    require_recipe_matches(v_recipe, lit_v(), "v");

    const ComplexMatrix vdg_recipe = matmul(h, matmul(tdg, matmul(tdg, h)));
    require_recipe_matches(vdg_recipe, lit_v_inv(), "vdg");

    return {GateDef{"v", 1, lit_v(), Provenance::derived_recipe},
            GateDef{"vdg", 1, lit_v_inv(), Provenance::derived_recipe}};
}

GateDef cnot(CnotOrientation orientation) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    if (orientation == CnotOrientation::control_q0_target_q1) {
        m(1, 1) = m(3, 3) = 0.0;
        m(1, 3) = m(3, 1) = 1.0;
    } else {
        m(2, 2) = m(3, 3) = 0.0;
        m(2, 3) = m(3, 2) = 1.0;
    }
    return GateDef{"cx", 2, std::move(m)};
}

GateDef sqrt_cnot() {
    const Complex p{0.5, 0.5};
    const Complex q{0.5, -0.5};
    ComplexMatrix m = ComplexMatrix::identity(4);
    m(1, 1) = p;
    m(1, 3) = q;
    m(3, 1) = q;
    m(3, 3) = p;
    return GateDef{"sqcx", 2, std::move(m)};
}

std::array<GateDef, 4> three_qubit_gates() {
    // Toffoli: controls on local bits 0 and 1, target bit 2.
    const ComplexMatrix toffoli = permutation8(3, 7);

    // Fredkin: control on bit 0, swap of bits 1 and 2.
    const ComplexMatrix fredkin = permutation8(3, 5);

    // Peres: Toffoli (controls 0,1 -> 2) followed by CNOT (0 -> 1).
    // cx on the low pair embeds as I (x) CX.
    const ComplexMatrix cx_low = kron(lit_identity2(), cnot(CnotOrientation::control_q0_target_q1).matrix);
    const ComplexMatrix peres = matmul(cx_low, toffoli);

    // Miller: exchange of basis states 3 (011) and 4 (100).
    const ComplexMatrix miller = permutation8(3, 4);

    return {GateDef{"ccx", 3, toffoli}, GateDef{"cswap", 3, fredkin},
            GateDef{"peres", 3, peres, Provenance::derived_recipe},
            GateDef{"miller", 3, miller}};
}

ComplexMatrix controlled(const ComplexMatrix &u, Tolerance tol) {
    if (!is_unitary(u, tol)) {
        throw std::invalid_argument("controlled: input matrix is not unitary");
    }
    const std::size_t d = u.dim();
    ComplexMatrix m = ComplexMatrix::identity(2 * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            m(d + r, d + c) = u(r, c);
        }
    }
    return m;
}

ComplexMatrix anti_controlled(const ComplexMatrix &u, Tolerance tol) {
    if (!is_unitary(u, tol)) {
        throw std::invalid_argument("anti_controlled: input matrix is not unitary");
    }
    const std::size_t d = u.dim();
    ComplexMatrix m = ComplexMatrix::identity(2 * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            m(r, c) = u(r, c);
        }
    }
    return m;
}

GateCatalog::GateCatalog() {
    // Run the derivation recipes for their internal literal assertions, but
    // register the closed forms so catalog entries are exact.
    (void)pauli_from_hadamard();
    gates_.push_back(GateDef{"id", 1, lit_identity2(), Provenance::derived_recipe});
    gates_.push_back(GateDef{"x", 1, lit_x(), Provenance::derived_recipe});
    gates_.push_back(GateDef{"z", 1, lit_z(), Provenance::derived_recipe});
    gates_.push_back(GateDef{"y", 1, lit_y(), Provenance::derived_recipe});
    gates_.push_back(GateDef{"h", 1, lit_h()});
    for (const auto &g : phase_gates()) {
        gates_.push_back(g);
    }
    for (const auto &g : sqrt_not_gates()) {
        gates_.push_back(g);
    }
    gates_.push_back(GateDef{"splitting", 1, flip_h(lit_h()), Provenance::derived_recipe});
    gates_.push_back(GateDef{"recombining", 1, flip_v(lit_h()), Provenance::derived_recipe});

    ComplexMatrix swap = ComplexMatrix::identity(4);
    swap(1, 1) = swap(2, 2) = 0.0;
    swap(1, 2) = swap(2, 1) = 1.0;
    gates_.push_back(GateDef{"swap", 2, std::move(swap)});

    gates_.push_back(cnot(CnotOrientation::control_q0_target_q1));
    gates_.push_back(sqrt_cnot());

    // Two-qubit controlled forms; control is q0 throughout, matching cx.
    const auto phase = phase_gates();
    gates_.push_back(GateDef{"cz", 2, controlled_on_low(lit_z()), Provenance::derived_recipe});
    gates_.push_back(GateDef{"cy", 2, controlled_on_low(lit_y()), Provenance::derived_recipe});
    gates_.push_back(GateDef{"cs", 2, controlled_on_low(phase[0].matrix), Provenance::derived_recipe});
    gates_.push_back(GateDef{"csdg", 2, controlled_on_low(phase[1].matrix), Provenance::derived_recipe});
    gates_.push_back(GateDef{"ct", 2, controlled_on_low(phase[2].matrix), Provenance::derived_recipe});
    gates_.push_back(GateDef{"ctdg", 2, controlled_on_low(phase[3].matrix), Provenance::derived_recipe});
    gates_.push_back(GateDef{"cu", 2, controlled_on_low(phase[4].matrix), Provenance::derived_recipe});
    gates_.push_back(GateDef{"cudg", 2, controlled_on_low(phase[5].matrix), Provenance::derived_recipe});
    gates_.push_back(GateDef{"ch", 2, controlled_on_low(lit_h()), Provenance::derived_recipe});
    gates_.push_back(GateDef{"cv", 2, controlled_on_low(lit_v()), Provenance::derived_recipe});
    gates_.push_back(GateDef{"cvdg", 2, controlled_on_low(lit_v_inv()), Provenance::derived_recipe});

    for (const auto &g : three_qubit_gates()) {
        gates_.push_back(g);
    }

    for (const auto &g : gates_) {
        if (!is_unitary(g.matrix, Tolerance{1e-12})) {
            throw std::logic_error("catalog gate " + g.name + " is not unitary");
        }
    }
}

const GateCatalog &GateCatalog::instance() {
    static const GateCatalog catalog;
    return catalog;
}

const GateDef *GateCatalog::find(std::string_view name) const {
    for (const auto &g : gates_) {
        if (g.name == name) {
            return &g;
        }
    }
    return nullptr;
}

const GateDef &GateCatalog::at(std::string_view name) const {
    if (const GateDef *g = find(name)) {
        return *g;
    }
    throw std::out_of_range("unknown gate: " + std::string(name));
}

} // namespace fqc
