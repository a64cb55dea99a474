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

#include <stdexcept>
#include <string>
#include <string_view>

#include "fqc/circuit.hpp"

namespace fqc {

/// Rejection of a .fqc source file, carrying the 1-based location and the
/// offending token.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, std::string token, const std::string &message);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string &token() const { return token_; }

  private:
    int line_;
    int column_;
    std::string token_;
};

/// An op that cannot be written back out (inline matrix, or a control
/// pattern with no mnemonic).
class EmitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses the line-oriented circuit format:
///
///   qubits N
///   <gate> [!]wire ...        # comments run to end of line
///
/// Controlled gates list controls first and targets last; a ! prefix turns
/// a control into an anti-control. qft/iqft/qft2/iqft2 take an inclusive
/// wire range `lo hi` and expand structurally at parse time.
Circuit parse(std::string_view source);

Circuit parse_file(const std::string &path);

/// Inverse of parse for catalog-named circuits: parse(emit(c)) equals c.
/// Controls are written before anti-controls; throws EmitError for ops with
/// no DSL spelling.
std::string emit(const Circuit &circuit);

} // namespace fqc
