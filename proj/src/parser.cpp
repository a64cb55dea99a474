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
#include "fqc/parser.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "fqc/qft.hpp"

namespace fqc {

namespace {

constexpr int kMaxParsedQubits = 16;

struct Token {
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize_line(std::string_view line, int line_number) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') {
            break;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r' && line[i] != '#') {
            ++i;
        }
        tokens.push_back(Token{std::string(line.substr(start, i - start)), line_number,
                               static_cast<int>(start) + 1});
    }
    return tokens;
}

int parse_int(const Token &token, std::string_view what) {
    int value = 0;
    const char *first = token.text.data();
    const char *last = first + token.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(token.line, token.column, token.text,
                         "expected " + std::string(what) + ", got '" + token.text + "'");
    }
    return value;
}

struct WireArg {
    int wire;
    bool anti;
};

WireArg parse_wire(const Token &token, int n_qubits) {
    std::string_view text = token.text;
    bool anti = false;
    if (!text.empty() && text.front() == '!') {
        anti = true;
        text.remove_prefix(1);
    }
    int value = 0;
    const char *first = text.data();
    const char *last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ParseError(token.line, token.column, token.text,
                         "expected a qubit index, got '" + token.text + "'");
    }
    if (value < 0 || value >= n_qubits) {
        throw ParseError(token.line, token.column, token.text,
                         "qubit " + std::to_string(value) + " out of range [0, " +
                             std::to_string(n_qubits) + ")");
    }
    return WireArg{value, anti};
}

bool is_qft_macro(std::string_view name) {
    return name == "qft" || name == "iqft" || name == "qft2" || name == "iqft2";
}

void expand_qft_macro(Circuit &circuit, const std::vector<Token> &tokens) {
    const std::string &name = tokens[0].text;
    if (tokens.size() != 3) {
        throw ParseError(tokens[0].line, tokens[0].column, name,
                         name + " takes a wire range 'lo hi', got " +
                             std::to_string(tokens.size() - 1) + " argument(s)");
    }
    const WireArg lo = parse_wire(tokens[1], circuit.n_qubits);
    const WireArg hi = parse_wire(tokens[2], circuit.n_qubits);
    if (lo.anti || hi.anti) {
        throw ParseError(tokens[1].line, tokens[1].column, tokens[1].text,
                         name + " takes plain wire indices, not anti-controls");
    }
    if (lo.wire > hi.wire) {
        throw ParseError(tokens[1].line, tokens[1].column, tokens[1].text,
                         name + " range is empty (lo > hi)");
    }
    const int width = hi.wire - lo.wire + 1;
    const bool inverse = name[0] == 'i';
    const bool squared = name.back() == '2';

    Circuit block;
    try {
        block = squared ? qft_squared_circuit(width, inverse)
                        : qft_circuit(QftSpec{width, inverse, true});
    } catch (const std::invalid_argument &e) {
        throw ParseError(tokens[0].line, tokens[0].column, name, e.what());
    }
    for (CircuitOp op : block.ops) {
        for (QubitIndex &w : op.targets) {
            w += lo.wire;
        }
        for (QubitIndex &w : op.controls) {
            w += lo.wire;
        }
        for (QubitIndex &w : op.anti_controls) {
            w += lo.wire;
        }
        circuit.ops.push_back(std::move(op));
    }
}

} // namespace

ParseError::ParseError(int line, int column, std::string token, const std::string &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      line_(line), column_(column), token_(std::move(token)) {}

Circuit parse(std::string_view source) {
    Circuit circuit;
    bool have_header = false;

    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        const std::size_t eol = source.find('\n', pos);
        const std::string_view line =
            source.substr(pos, eol == std::string_view::npos ? source.size() - pos
                                                             : eol - pos);
        ++line_number;
        const std::vector<Token> tokens = tokenize_line(line, line_number);
        if (eol == std::string_view::npos) {
            pos = source.size() + 1;
        } else {
            pos = eol + 1;
        }
        if (tokens.empty()) {
            continue;
        }

        if (!have_header) {
            if (tokens[0].text != "qubits") {
                throw ParseError(tokens[0].line, tokens[0].column, tokens[0].text,
                                 "expected 'qubits N' header, got '" + tokens[0].text +
                                     "'");
            }
            if (tokens.size() != 2) {
                throw ParseError(tokens[0].line, tokens[0].column, tokens[0].text,
                                 "'qubits' takes exactly one count");
            }
            const int n = parse_int(tokens[1], "a qubit count");
            if (n < 1 || n > kMaxParsedQubits) {
                throw ParseError(tokens[1].line, tokens[1].column, tokens[1].text,
                                 "qubit count must be in [1, " +
                                     std::to_string(kMaxParsedQubits) + "]");
            }
            circuit.n_qubits = n;
            have_header = true;
            continue;
        }

        const Token &head = tokens[0];
        if (head.text == "qubits") {
            throw ParseError(head.line, head.column, head.text,
                             "duplicate 'qubits' header");
        }
        if (is_qft_macro(head.text)) {
            expand_qft_macro(circuit, tokens);
            continue;
        }

        std::vector<QubitIndex> wires;
        std::vector<bool> anti;
        bool any_anti = false;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const WireArg arg = parse_wire(tokens[i], circuit.n_qubits);
            wires.push_back(arg.wire);
            anti.push_back(arg.anti);
            any_anti |= arg.anti;
        }
        try {
            Circuit probe{circuit.n_qubits,
                          {op_from_mnemonic(head.text, wires,
                                            any_anti ? anti : std::vector<bool>{})}};
            validate(probe);
            circuit.ops.push_back(std::move(probe.ops.front()));
        } catch (const std::invalid_argument &e) {
            throw ParseError(head.line, head.column, head.text, e.what());
        }
    }

    if (!have_header) {
        throw ParseError(line_number, 1, "", "missing 'qubits N' header");
    }
    return circuit;
}

Circuit parse_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string emit(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.n_qubits) + "\n";
    for (const CircuitOp &op : circuit.ops) {
        const auto mnemonic = mnemonic_of(op);
        if (!mnemonic) {
            throw EmitError(op.gate.empty()
                                ? "inline-matrix op has no text form"
                                : "op '" + op.gate + "' has no mnemonic for its controls");
        }
        out += *mnemonic;
        for (QubitIndex w : op.controls) {
            out += ' ';
            out += std::to_string(w);
        }
        for (QubitIndex w : op.anti_controls) {
            out += " !";
            out += std::to_string(w);
        }
        for (QubitIndex w : op.targets) {
            out += ' ';
            out += std::to_string(w);
        }
        out += '\n';
    }
    return out;
}

} // namespace fqc
