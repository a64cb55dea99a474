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
#include <variant>
#include <vector>

#include <json.hpp>

#include "fqc/circuit.hpp"
#include "fqc/complex_matrix.hpp"

namespace fqc {

/// Either side of an identity: a raw matrix or a circuit to expand.
using Expr = std::variant<ComplexMatrix, Circuit>;

ComplexMatrix eval(const Expr &expr);

/// A named equivalence claim checked as dist_up_to_phase(lhs, rhs) < eps.
/// Negative identities assert the opposite: the distance must stay above
/// min_distance.
struct Identity {
    std::string id;
    std::string paper_ref;
    Expr lhs;
    Expr rhs;
    bool negative = false;
    double min_distance = 0.0;
    std::optional<double> tol_override;
};

struct CheckResult {
    std::string id;
    std::string paper_ref;
    bool negative = false;
    double distance = 0.0;
    double phase = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<CheckResult> results;
    int passed = 0;
    int failed = 0;
    bool all_pass = true;
};

/// The built-in catalog: every checkable gate/Fourier equivalence, plus the
/// one negative claim (sqrt-CNOT differs from the Fourier matrix itself).
const std::vector<Identity> &builtin_catalog();

CheckResult check(const Identity &identity, Tolerance tol = {});

Report run_all(const std::vector<Identity> &catalog, Tolerance tol = {});
Report run_all(Tolerance tol = {});

/// JSON array of {id, paper_ref, pass, distance, phase}; distances and
/// phases are rounded to 1e-14 before serialization so reports are
/// platform-stable.
nlohmann::json report_to_json(const Report &report);

} // namespace fqc
