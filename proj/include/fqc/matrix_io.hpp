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

#include <json.hpp>

#include "fqc/complex_matrix.hpp"

namespace fqc {

/// JSON form: array of rows, each entry {"re": float, "im": float}.
/// Serialization is bit-exact: parsing the emitted text reproduces the
/// original doubles.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j);

/// CSV form: one row per line, entries as "re+imi" strings.
std::string matrix_to_csv(const ComplexMatrix &m);

/// Fixed 15-significant-digit rendering used for all human-readable CLI
/// output, so output is byte-for-byte deterministic.
std::string format_double(double value);
std::string format_complex(Complex value);

} // namespace fqc
