// Copyright 2026 The gauss-sep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense kernels for the 2x2, 4x4 (and 8x8 embedding) matrices that appear in
// two-mode covariance analysis. Everything is a value type; nothing allocates.

#ifndef GAUSS_SEP_SMALLMAT_H_
#define GAUSS_SEP_SMALLMAT_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>

#include "gauss_sep/errors.h"

namespace gauss_sep {

namespace internal {

template <typename T>
bool is_finite(const T& x) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::isfinite(x);
  } else {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  }
}

}  // namespace internal

/// Row-major N x N matrix with value semantics.
template <typename T, std::size_t N>
class SquareMatrix {
 public:
  using value_type = T;
  static constexpr std::size_t kSize = N;
  using Rows = std::array<std::array<T, N>, N>;

  SquareMatrix() = default;

  /// Rejects NaN and infinite entries.
  explicit SquareMatrix(const Rows& rows) {
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) {
        if (!internal::is_finite(rows[r][c])) {
          throw ContractError("matrix entry (" + std::to_string(r) + "," +
                              std::to_string(c) + ") is not finite");
        }
        data_[r * N + c] = rows[r][c];
      }
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1);
    return m;
  }

  static SquareMatrix diagonal(const std::array<T, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * N + c];
  }

  SquareMatrix transpose() const {
    SquareMatrix t;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Largest entry modulus.
  double max_abs() const {
    double m = 0.0;
    for (const T& x : data_) m = std::max(m, static_cast<double>(std::abs(x)));
    return m;
  }

  double trace_real() const {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += std::real((*this)(i, i));
    return s;
  }

  const std::array<T, N * N>& data() const { return data_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  SquareMatrix& operator*=(T s) {
    for (T& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) {
    return a += b;
  }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) {
    return a -= b;
  }
  friend SquareMatrix operator*(SquareMatrix a, T s) { return a *= s; }
  friend SquareMatrix operator*(T s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix p;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const T ark = a(r, k);
        for (std::size_t c = 0; c < N; ++c) p(r, c) += ark * b(k, c);
      }
    return p;
  }

  friend std::array<T, N> operator*(const SquareMatrix& a,
                                    const std::array<T, N>& x) {
    std::array<T, N> y{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) y[r] += a(r, c) * x[c];
    return y;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<T, N * N> data_{};
};

using Mat2 = SquareMatrix<double, 2>;
using Mat4 = SquareMatrix<double, 4>;
using Mat8 = SquareMatrix<double, 8>;
using CMat4 = SquareMatrix<std::complex<double>, 4>;
using Vec2 = std::array<double, 2>;
using Vec4 = std::array<double, 4>;

/// Max-entry distance between two matrices.
template <typename T, std::size_t N>
double max_abs_diff(const SquareMatrix<T, N>& a, const SquareMatrix<T, N>& b) {
  return (a - b).max_abs();
}

/// Complex Hermitian 4x4 matrix. Construction symmetrizes (M + M^dagger)/2
/// after checking |M - M^dagger|_max <= 1e-12 (1 + |M|_max).
class HermMat4 {
 public:
  explicit HermMat4(const CMat4& m);

  /// Embeds a real symmetric matrix (imaginary part zero).
  static HermMat4 from_real(const Mat4& m);

  /// re + i * im, with re symmetric and im antisymmetric.
  static HermMat4 from_parts(const Mat4& re, const Mat4& im);

  const CMat4& matrix() const { return m_; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
    return m_(r, c);
  }
  double max_abs() const { return m_.max_abs(); }

  /// Real-symmetric 8x8 embedding [[Re, -Im], [Im, Re]]; its spectrum is the
  /// Hermitian spectrum with every eigenvalue doubled.
  Mat8 real_embedding() const;

 private:
  CMat4 m_;
};

inline constexpr double kDefaultPsdTol = 1e-10;
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kSingularTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

/// Numerical realization of "M >= 0".
struct PsdMargin {
  double min_eigenvalue = 0.0;
  double scale = 0.0;  // largest absolute eigenvalue
  bool is_psd = false;
};

/// Eigen-decomposition of a real symmetric matrix: ascending eigenvalues,
/// vectors stored as columns.
template <std::size_t N>
struct SymmetricEigen {
  std::array<double, N> values{};
  SquareMatrix<double, N> vectors;
};

/// Cyclic Jacobi rotations. Throws NumericalError after kMaxJacobiSweeps or
/// when the spectral reconstruction residual exceeds 1e-10 (1 + |m|_max).
/// Instantiated for N = 2, 4, 8.
template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(const SquareMatrix<double, N>& m);

bool is_symmetric(const Mat4& m, double rel_tol = kSymmetryTol);

std::array<double, 4> sym_eigenvalues(const Mat4& m);
std::array<double, 4> herm_eigenvalues(const HermMat4& m);

/// Unit eigenvector belonging to the smallest eigenvalue.
std::array<std::complex<double>, 4> herm_min_eigenvector(const HermMat4& m);

double det4(const Mat4& m);
/// Real part of the determinant; the imaginary residue must be round-off.
double det4(const HermMat4& m);

/// Throws SingularMatrixError when |det| <= 1e-12 (1 + |m|_max^4).
Mat4 inv4(const Mat4& m);

PsdMargin psd_margin_from_eigenvalues(const std::array<double, 4>& eig,
                                      double tol);
PsdMargin psd_margin(const Mat4& m, double tol = kDefaultPsdTol);
PsdMargin psd_margin(const HermMat4& m, double tol = kDefaultPsdTol);

inline double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace gauss_sep

#endif  // GAUSS_SEP_SMALLMAT_H_
