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
#include "fqc/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fqc {

namespace {

void require_dim(std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("matrix dimension must be >= 1");
    }
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b,
                      const char *what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    require_dim(dim);
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries)
    : ComplexMatrix(dim, std::vector<Complex>(entries)) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    require_dim(dim);
    if (entries_.size() != dim * dim) {
        throw std::invalid_argument("entry count " + std::to_string(entries_.size()) +
                                    " does not match dim " + std::to_string(dim));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b);
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "add");
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = a.entries()[i] + b.entries()[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "subtract");
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = a.entries()[i] - b.entries()[i];
    }
    return out;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m) {
    ComplexMatrix out(m.dim());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = scalar * m.entries()[i];
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t k = 0; k < da; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < db; ++j) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + j, k * db + l) = aik * b(j, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = std::conj(a(j, i));
        }
    }
    return out;
}

ComplexMatrix flip_h(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(n - 1 - i, j);
        }
    }
    return out;
}

ComplexMatrix flip_v(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(i, n - 1 - j);
        }
    }
    return out;
}

ComplexMatrix reversal_permutation(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, dim - 1 - i) = 1.0;
    }
    return m;
}

double frobenius_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    for (const Complex &z : a.entries()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "frobenius_distance");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        sum += std::norm(a.entries()[i] - b.entries()[i]);
    }
    return std::sqrt(sum);
}

PhaseDistance dist_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "dist_up_to_phase");
    Complex trace{};
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        trace += std::conj(b.entries()[i]) * a.entries()[i];
    }

    double phase = 0.0;
    if (trace != Complex{}) {
        phase = std::arg(trace);
    } else {
        // Fallback when tr(b^dagger a) vanishes: align on the entry pair with
        // the largest |b| magnitude. If b is all-zero the distance is ||a||.
        double best = 0.0;
        Complex pair{};
        for (std::size_t i = 0; i < a.entries().size(); ++i) {
            const double mag = std::abs(b.entries()[i]);
            if (mag > best) {
                best = mag;
                pair = std::conj(b.entries()[i]) * a.entries()[i];
            }
        }
        if (best == 0.0) {
            return PhaseDistance{frobenius_norm(a), 0.0};
        }
        phase = std::arg(pair);
    }

    const Complex rot = std::polar(1.0, phase);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        sum += std::norm(a.entries()[i] - rot * b.entries()[i]);
    }
    return PhaseDistance{std::sqrt(sum), phase};
}

bool is_unitary(const ComplexMatrix &a, Tolerance tol) {
    const ComplexMatrix gram = matmul(dagger(a), a);
    return frobenius_distance(gram, ComplexMatrix::identity(a.dim())) < tol.eps;
}

ComplexVector mat_vec(const ComplexMatrix &m, const ComplexVector &v) {
    if (v.size() != m.dim()) {
        throw std::invalid_argument("mat_vec: dimension mismatch");
    }
    ComplexVector out(v.size());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < m.dim(); ++j) {
            acc += m(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

double vector_norm(const ComplexVector &v) {
    double sum = 0.0;
    for (const Complex &z : v) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

} // namespace fqc
