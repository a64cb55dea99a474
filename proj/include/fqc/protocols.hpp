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

#include <string>
#include <vector>

#include <json.hpp>

#include "fqc/circuit.hpp"
#include "fqc/state.hpp"

namespace fqc {

/// Bell preparation from |00>: a) {H, CNOT}, b) the all-Fourier spelling,
/// c) {H, Controlled-S^-1}.
enum class BellVariant { a, b, c };

/// GHZ preparation from |0...0>, same three vocabularies with a step-over
/// CNOT for the far wire(s).
enum class GhzVariant { a, b, c };

/// Teleportation circuit vocabularies: a) the traditional {H, CNOT, CZ}
/// corrections, b) the Z-correction conjugated into {H, CNOT}, c) the
/// all-Fourier spelling, d) the {H, Controlled-S^-1} spelling.
enum class TeleportVariant { a, b, c, d };

/// Secret-sharing vocabularies a-e; see qss().
enum class QssVariant { a, b, c, d, e };

Circuit bell_pair(BellVariant variant);

/// n must be 3 or 4.
Circuit ghz(int n, GhzVariant variant);

/// One enumerated measurement outcome of a protocol run, after the
/// classically-controlled corrections for that outcome were applied.
/// fidelity compares the corrected state against the ideal output.
struct ProtocolBranch {
    std::vector<int> outcome;
    double probability = 0.0;
    PureState post_state;
    double fidelity = 0.0;
};

struct ProtocolResult {
    std::string variant;
    std::vector<ProtocolBranch> branches;
};

/// Teleports a 1-qubit state across a Bell pair (input on wire 0, pair on
/// wires 1-2, output on wire 2). Measurement is exhaustive branch
/// enumeration: four branches, each of probability 1/4, each corrected by
/// X/Z suffixes selected by the outcome bits. Throws std::invalid_argument
/// for non-normalized input.
ProtocolResult teleport(const PureState &input, TeleportVariant variant);

/// Secret sharing over a GHZ resource: input on wire 0, GHZ over wires
/// 1..parties, reconstruction on the last wire. The dealer measures wires
/// 0-1 after the Bell rotation, intermediate parties measure in the X
/// basis, and the reconstructing party's correction is derived per branch
/// by searching {I, X, Z, XZ} for the fidelity-maximizing Pauli, spelled in
/// the variant's vocabulary. parties must be 3 or 4.
ProtocolResult qss(const PureState &input, int parties, QssVariant variant);

/// Outcome bits as a ket-style string: first measured qubit rightmost.
std::string outcome_string(const std::vector<int> &outcome);

/// Branch table serialization:
/// {outcome, probability, post_state: [{re, im}, ...], fidelity}.
nlohmann::json branches_to_json(const ProtocolResult &result);

} // namespace fqc
