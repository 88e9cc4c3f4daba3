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

#include "gauss_sep/smallmat.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <utility>

namespace gauss_sep {
namespace {

using Complex = std::complex<double>;

// Gaussian elimination with partial pivoting.
template <typename T, std::size_t N>
T determinant(SquareMatrix<T, N> m) {
  T det(1);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    }
    if (m(pivot, col) == T(0)) return T(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < N; ++c) std::swap(m(col, c), m(pivot, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < N; ++r) {
      const T factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < N; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

}  // namespace

HermMat4::HermMat4(const CMat4& m) {
  double asym = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (!internal::is_finite(m(r, c))) {
        throw ContractError("Hermitian matrix entry is not finite");
      }
      asym = std::max(asym, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  if (asym > kSymmetryTol * (1.0 + m.max_abs())) {
    std::ostringstream os;
    os << "matrix is not Hermitian: |M - M^dagger|_max = " << asym;
    throw ContractError(os.str());
  }
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      m_(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
}

HermMat4 HermMat4::from_real(const Mat4& m) {
  return from_parts(m, Mat4());
}

HermMat4 HermMat4::from_parts(const Mat4& re, const Mat4& im) {
  CMat4 c;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) c(r, k) = Complex(re(r, k), im(r, k));
  return HermMat4(c);
}

Mat8 HermMat4::real_embedding() const {
  Mat8 e;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const double re = m_(r, c).real();
      const double im = m_(r, c).imag();
      e(r, c) = re;
      e(r + 4, c + 4) = re;
      e(r, c + 4) = -im;
      e(r + 4, c) = im;
    }
  }
  return e;
}

template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(const SquareMatrix<double, N>& m) {
  SquareMatrix<double, N> a = m;
  SquareMatrix<double, N> v = SquareMatrix<double, N>::identity();

  auto off_diagonal = [&a] {
    double s = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
  };
  double frobenius = 0.0;
  for (double x : m.data()) frobenius += x * x;
  frobenius = std::sqrt(frobenius);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal() <= 1e-15 * frobenius) {
      converged = true;
      break;
    }
    bool rotated = false;
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Skip rotations that cannot change the diagonal in floating point.
        if (std::abs(apq) < 1e-300 ||
            (std::abs(a(p, p)) + 1e3 * std::abs(apq) == std::abs(a(p, p)) &&
             std::abs(a(q, q)) + 1e3 * std::abs(apq) == std::abs(a(q, q)))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    if (!rotated) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NumericalError("Jacobi iteration did not converge within " +
                             std::to_string(kMaxJacobiSweeps) + " sweeps",
                         off_diagonal());
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a(i, i) < a(j, j);
  });

  SymmetricEigen<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }

  // Spectral reconstruction residual: |m - V diag(w) V^T|_max.
  double residual = 0.0;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < N; ++k)
        s += out.vectors(r, k) * out.values[k] * out.vectors(c, k);
      residual = std::max(residual, std::abs(s - m(r, c)));
    }
  }
  if (residual > 1e-10 * (1.0 + m.max_abs())) {
    throw NumericalError("eigen-decomposition residual too large", residual);
  }
  return out;
}

template SymmetricEigen<2> jacobi_eigen<2>(const SquareMatrix<double, 2>&);
template SymmetricEigen<4> jacobi_eigen<4>(const SquareMatrix<double, 4>&);
template SymmetricEigen<8> jacobi_eigen<8>(const SquareMatrix<double, 8>&);

bool is_symmetric(const Mat4& m, double rel_tol) {
  double asym = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = r + 1; c < 4; ++c)
      asym = std::max(asym, std::abs(m(r, c) - m(c, r)));
  return asym <= rel_tol * (1.0 + m.max_abs());
}

std::array<double, 4> sym_eigenvalues(const Mat4& m) {
  if (!is_symmetric(m)) {
    throw ContractError("sym_eigenvalues: input is not symmetric");
  }
  return jacobi_eigen(m).values;
}

std::array<double, 4> herm_eigenvalues(const HermMat4& m) {
  const auto doubled = jacobi_eigen(m.real_embedding()).values;
  // Each eigenvalue appears twice in the embedding; average the pair.
  std::array<double, 4> w{};
  for (std::size_t k = 0; k < 4; ++k)
    w[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
  return w;
}

std::array<std::complex<double>, 4> herm_min_eigenvector(const HermMat4& m) {
  const auto eig = jacobi_eigen(m.real_embedding());
  std::array<Complex, 4> x{};
  double norm = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    x[k] = Complex(eig.vectors(k, 0), eig.vectors(k + 4, 0));
    norm += std::norm(x[k]);
  }
  norm = std::sqrt(norm);
  for (auto& z : x) z /= norm;
  return x;
}

double det4(const Mat4& m) { return determinant(m); }

double det4(const HermMat4& m) {
  const Complex d = determinant(m.matrix());
  const double scale = m.max_abs();
  if (std::abs(d.imag()) > 1e-10 * (1.0 + scale * scale * scale * scale)) {
    throw NumericalError("Hermitian determinant has a non-negligible "
                         "imaginary part",
                         d.imag());
  }
  return d.real();
}

Mat4 inv4(const Mat4& m) {
  const double det = det4(m);
  const double scale = m.max_abs();
  if (std::abs(det) <= kSingularTol * (1.0 + scale * scale * scale * scale)) {
    std::ostringstream os;
    os << "inv4: matrix is numerically singular (det = " << det << ")";
    throw SingularMatrixError(os.str(), det);
  }
  // Gauss-Jordan with partial pivoting.
  Mat4 a = m;
  Mat4 inv = Mat4::identity();
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (pivot != col) {
      for (std::size_t c = 0; c < 4; ++c) {
        std::swap(a(col, c), a(pivot, c));
        std::swap(inv(col, c), inv(pivot, c));
      }
    }
    const double d = a(col, col);
    for (std::size_t c = 0; c < 4; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < 4; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

PsdMargin psd_margin_from_eigenvalues(const std::array<double, 4>& eig,
                                      double tol) {
  PsdMargin out;
  out.min_eigenvalue = *std::min_element(eig.begin(), eig.end());
  out.scale = 0.0;
  for (double w : eig) out.scale = std::max(out.scale, std::abs(w));
  out.is_psd = out.min_eigenvalue >= -tol * std::max(1.0, out.scale);
  return out;
}

PsdMargin psd_margin(const Mat4& m, double tol) {
  return psd_margin_from_eigenvalues(sym_eigenvalues(m), tol);
}

PsdMargin psd_margin(const HermMat4& m, double tol) {
  return psd_margin_from_eigenvalues(herm_eigenvalues(m), tol);
}

}  // namespace gauss_sep
