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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fqc {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Absolute Frobenius-norm tolerance. All catalog matrices come from closed
/// forms, so the default leaves ~1e-13 of headroom over double rounding.
struct Tolerance {
    double eps = 1e-10;
};

/// Dense square matrix of complex doubles, row-major storage.
///
/// Values are immutable by convention once built: every operation below is a
/// pure function returning a new matrix, so instances are safe to share
/// across threads.
class ComplexMatrix {
  public:
    /// Empty (dim 0) placeholder; any real matrix has dim >= 1.
    ComplexMatrix() = default;

    /// Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(std::size_t dim);

    /// Matrix from a flat row-major entry list; entries.size() must be dim^2.
    ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    /// Flat row-major entries. Entry (r, c) lives at index r * dim + c.
    const std::vector<Complex> &entries() const { return entries_; }
    std::vector<Complex> &entries() { return entries_; }

    bool operator==(const ComplexMatrix &other) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Frobenius distance minimized over a global phase, plus the minimizing
/// phase itself.
struct PhaseDistance {
    double distance = 0.0;
    double phase = 0.0;
};

/// Matrix product a * b. Throws std::invalid_argument on dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m);

/// Kronecker product. The right factor indexes the low (least significant)
/// bits of the result: (a (x) b)(i*db + j, k*db + l) = a(i, k) * b(j, l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix &a);

/// Rows in reversed order (flip about the horizontal mid-axis). Equals the
/// anti-diagonal permutation of matching dim times a; for dim 2 this is X*a.
ComplexMatrix flip_h(const ComplexMatrix &a);

/// Columns in reversed order (flip about the vertical mid-axis); a times the
/// anti-diagonal permutation; for dim 2 this is a*X.
ComplexMatrix flip_v(const ComplexMatrix &a);

/// The anti-diagonal permutation matrix (reversal); X for dim 2.
ComplexMatrix reversal_permutation(std::size_t dim);

double frobenius_norm(const ComplexMatrix &a);
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// min over real phi of ||a - e^{i phi} b||_F.
///
/// The minimizing phase is arg(tr(b^dagger a)) when that trace is nonzero.
/// When it vanishes the distance no longer depends on phi; the reported
/// phase then comes from the entry pair (a_ij, b_ij) maximizing |b_ij|, and
/// when b is all-zero the distance is ||a||_F with phase 0.
PhaseDistance dist_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b);

/// True iff ||a^dagger a - I||_F < tol.eps.
bool is_unitary(const ComplexMatrix &a, Tolerance tol = {});

/// Matrix-vector product. Throws std::invalid_argument on size mismatch.
ComplexVector mat_vec(const ComplexMatrix &m, const ComplexVector &v);

double vector_norm(const ComplexVector &v);

} // namespace fqc
