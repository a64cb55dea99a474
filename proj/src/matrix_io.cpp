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
#include "fqc/matrix_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace fqc {

nlohmann::json matrix_to_json(const ComplexMatrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrix JSON must be a non-empty array of rows");
    }
    const std::size_t dim = j.size();
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto &row = j.at(r);
        if (!row.is_array() || row.size() != dim) {
            throw std::invalid_argument("matrix JSON rows must all have length dim");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            const auto &e = row.at(c);
            m(r, c) = Complex{e.at("re").get<double>(), e.at("im").get<double>()};
        }
    }
    return m;
}

std::string matrix_to_csv(const ComplexMatrix &m) {
    std::string out;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += format_complex(m(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

std::string format_complex(Complex value) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", value.real(), value.imag());
    return buf;
}

} // namespace fqc
