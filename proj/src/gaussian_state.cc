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

#include "gauss_sep/gaussian_state.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gauss_sep/random.h"

namespace gauss_sep {
namespace {

Mat2 rotation2(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Mat2({{{c, -s}, {s, c}}});
}

// Local map taking a positive-definite 2x2 block X to sqrt(det X) * I:
// rotate onto the principal axes, then squeeze to equalize the variances.
Mat2 balance_block(const Mat2& x) {
  const double mean = 0.5 * (x(0, 0) + x(1, 1));
  const double half_diff = 0.5 * (x(0, 0) - x(1, 1));
  const double radius = std::hypot(half_diff, x(0, 1));
  const double theta = 0.5 * std::atan2(x(0, 1), half_diff);
  const double lambda_major = mean + radius;
  const double lambda_minor = det2(x) / lambda_major;
  const double kappa = std::pow(lambda_minor / lambda_major, 0.25);
  const Mat2 squeeze({{{kappa, 0.0}, {0.0, 1.0 / kappa}}});
  return squeeze * rotation2(theta).transpose();
}

// Rotation-only singular value decomposition M = Rot(phi) diag(sx, sy)
// Rot(theta) with sx >= |sy|; sy carries the sign of det M.
struct RotationSvd {
  Mat2 left;   // Rot(phi)
  Mat2 right;  // Rot(theta)
  double sx;
  double sy;
};

RotationSvd rotation_svd(const Mat2& m) {
  const double e = 0.5 * (m(0, 0) + m(1, 1));
  const double f = 0.5 * (m(0, 0) - m(1, 1));
  const double g = 0.5 * (m(1, 0) + m(0, 1));
  const double h = 0.5 * (m(1, 0) - m(0, 1));
  const double q = std::hypot(e, h);
  const double r = std::hypot(f, g);
  const double a1 = std::atan2(g, f);
  const double a2 = std::atan2(h, e);
  return RotationSvd{rotation2(0.5 * (a2 + a1)), rotation2(0.5 * (a2 - a1)),
                     q + r, q - r};
}

// Lower-triangular L with L L^T = m; m must be positive definite.
Mat4 cholesky(const Mat4& m) {
  Mat4 l;
  for (std::size_t j = 0; j < 4; ++j) {
    double diag = m(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > 0.0)) {
      throw RepresentationError("cholesky: matrix is not positive definite",
                                diag);
    }
    l(j, j) = std::sqrt(diag);
    for (std::size_t i = j + 1; i < 4; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(const Mat4& v) {
  if (!is_symmetric(v)) {
    throw ContractError("covariance matrix is not symmetric");
  }
  v_ = 0.5 * (v + v.transpose());
}

CovarianceMatrix CovarianceMatrix::from_blocks(const Mat2& a, const Mat2& b,
                                               const Mat2& c) {
  Mat4 v;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t k = 0; k < 2; ++k) {
      v(r, k) = a(r, k);
      v(r + 2, k + 2) = b(r, k);
      v(r, k + 2) = c(r, k);
      v(k + 2, r) = c(r, k);
    }
  }
  return CovarianceMatrix(v);
}

Mat2 CovarianceMatrix::a_block() const {
  return Mat2({{{v_(0, 0), v_(0, 1)}, {v_(1, 0), v_(1, 1)}}});
}

Mat2 CovarianceMatrix::b_block() const {
  return Mat2({{{v_(2, 2), v_(2, 3)}, {v_(3, 2), v_(3, 3)}}});
}

Mat2 CovarianceMatrix::c_block() const {
  return Mat2({{{v_(0, 2), v_(0, 3)}, {v_(1, 2), v_(1, 3)}}});
}

Mat2 SymplecticForm::j() { return Mat2({{{0.0, 1.0}, {-1.0, 0.0}}}); }

Mat4 SymplecticForm::omega() {
  Mat4 o;
  o(0, 1) = 1.0;
  o(1, 0) = -1.0;
  o(2, 3) = 1.0;
  o(3, 2) = -1.0;
  return o;
}

Mat4 SymplecticForm::omega_transposed() {
  Mat4 o = omega();
  o(2, 3) = -1.0;
  o(3, 2) = 1.0;
  return o;
}

std::optional<double> StandardForm::t() const {
  if (c1 == 0.0) return std::nullopt;
  return std::abs(c2 / c1);
}

CovarianceMatrix StandardForm::to_covariance() const {
  return CovarianceMatrix(Mat4({{{a, 0.0, c1, 0.0},
                                 {0.0, a, 0.0, c2},
                                 {c1, 0.0, b, 0.0},
                                 {0.0, c2, 0.0, b}}}));
}

SqueezeParams::SqueezeParams(double r1, double r2) : r1_(r1), r2_(r2) {
  if (!(r1 > 0.0) || !(r2 > 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) {
    throw ContractError("squeeze parameters must be finite and positive");
  }
}

LocalSymplectic::LocalSymplectic(const Mat2& s1, const Mat2& s2)
    : s1_(s1), s2_(s2) {
  if (std::abs(det2(s1) - 1.0) > 1e-10 || std::abs(det2(s2) - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "local symplectic blocks must have unit determinant (got "
       << det2(s1) << ", " << det2(s2) << ")";
    throw ContractError(os.str());
  }
}

LocalSymplectic LocalSymplectic::identity() {
  return LocalSymplectic(Mat2::identity(), Mat2::identity());
}

LocalSymplectic LocalSymplectic::rotation(double theta1, double theta2) {
  return LocalSymplectic(rotation2(theta1), rotation2(theta2));
}

LocalSymplectic LocalSymplectic::squeeze(const SqueezeParams& r) {
  const double k1 = std::sqrt(r.r1());
  const double k2 = std::sqrt(r.r2());
  return LocalSymplectic(Mat2::diagonal({k1, 1.0 / k1}),
                         Mat2::diagonal({k2, 1.0 / k2}));
}

Mat4 LocalSymplectic::full() const {
  Mat4 s;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      s(r, c) = s1_(r, c);
      s(r + 2, c + 2) = s2_(r, c);
    }
  }
  return s;
}

LocalSymplectic LocalSymplectic::inverse() const {
  // For det = 1, [[a, b], [c, d]]^{-1} = [[d, -b], [-c, a]].
  auto inv = [](const Mat2& m) {
    return Mat2({{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}}});
  };
  return LocalSymplectic(inv(s1_), inv(s2_));
}

LocalSymplectic LocalSymplectic::then_after(const LocalSymplectic& other) const {
  return LocalSymplectic(s1_ * other.s1_, s2_ * other.s2_);
}

Mat4 GaussianPFunction::weight_covariance() const { return inv4(precision); }

double GaussianPFunction::density(const Vec4& x) const {
  Vec4 y{};
  for (std::size_t i = 0; i < 4; ++i) y[i] = x[i] - mean[i];
  const Vec4 py = precision * y;
  double quad = 0.0;
  for (std::size_t i = 0; i < 4; ++i) quad += y[i] * py[i];
  return norm_factor * std::exp(-0.5 * quad);
}

PsdMargin is_physical(const CovarianceMatrix& v, double tol) {
  return psd_margin(
      HermMat4::from_parts(v.matrix(), 0.5 * SymplecticForm::omega()), tol);
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& v) {
  Mat4 m = v.matrix();
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == 3) continue;
    m(k, 3) = -m(k, 3);
    m(3, k) = -m(3, k);
  }
  return CovarianceMatrix(m);
}

CovarianceMatrix apply_symplectic(const CovarianceMatrix& v,
                                  const LocalSymplectic& s) {
  const Mat4 sf = s.full();
  return CovarianceMatrix(sf * v.matrix() * sf.transpose());
}

StandardFormReduction to_standard_form(const CovarianceMatrix& v, double tol) {
  const PsdMargin phys = is_physical(v, tol);
  if (!phys.is_psd) {
    std::ostringstream os;
    os << "to_standard_form: covariance matrix is unphysical (min eigenvalue "
       << phys.min_eigenvalue << ")";
    throw UnphysicalStateError(os.str(), phys.min_eigenvalue);
  }
  const Mat2 a_block = v.a_block();
  const Mat2 b_block = v.b_block();

  // Step 1: balance each local block to a multiple of the identity.
  const Mat2 s1 = balance_block(a_block);
  const Mat2 s2 = balance_block(b_block);
  const Mat2 c_balanced = s1 * v.c_block() * s2.transpose();

  // Step 2: residual rotations diagonalize the cross block. Rot^T a I Rot
  // = a I, so the local blocks stay balanced.
  const RotationSvd svd = rotation_svd(c_balanced);
  const Mat2 u1 = svd.left.transpose() * s1;
  const Mat2 u2 = svd.right * s2;

  StandardFormReduction out{
      StandardForm{std::sqrt(det2(a_block)), std::sqrt(det2(b_block)), svd.sx,
                   svd.sy},
      LocalSymplectic(u1, u2)};
  return out;
}

PsdMargin p_condition(const CovarianceMatrix& v, double tol) {
  return psd_margin(v.matrix() - 0.5 * Mat4::identity(), tol);
}

GaussianPFunction build_p_function(const CovarianceMatrix& v) {
  const PsdMargin margin = p_condition(v);
  if (margin.min_eigenvalue < kStrictRepresentabilityTol) {
    std::ostringstream os;
    os << "no strict Gaussian P-representation: min eigenvalue of V - I/2 is "
       << margin.min_eigenvalue;
    throw RepresentationError(os.str(), margin.min_eigenvalue);
  }
  GaussianPFunction pf;
  pf.precision = inv4(v.matrix() - 0.5 * Mat4::identity());
  pf.precision = 0.5 * (pf.precision + pf.precision.transpose());
  pf.norm_factor =
      std::sqrt(det4(pf.precision)) / (4.0 * std::numbers::pi * std::numbers::pi);
  return pf;
}

MomentEstimate sample_p_function(const GaussianPFunction& pf, std::size_t n,
                                 std::uint64_t seed) {
  if (n < 1000) {
    throw ContractError("sample_p_function: need at least 1000 samples");
  }
  const Mat4 weight_cov = pf.weight_covariance();
  const Mat4 l = cholesky(0.5 * (weight_cov + weight_cov.transpose()));

  RandomStream rng(seed);
  Mat4 sum;     // sum of y_i y_j
  Mat4 sum_sq;  // sum of (y_i y_j)^2
  for (std::size_t s = 0; s < n; ++s) {
    Vec4 z{};
    for (double& zi : z) zi = rng.normal();
    const Vec4 y = l * z;  // deviation from the P-function mean
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) {
        const double p = y[i] * y[j];
        sum(i, j) += p;
        sum_sq(i, j) += p * p;
      }
    }
  }
  const double nd = static_cast<double>(n);
  Mat4 cov;
  Mat4 se;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const double m = sum(i, j) / nd;
      const double var = std::max(0.0, sum_sq(i, j) / nd - m * m);
      cov(i, j) = cov(j, i) = m + (i == j ? 0.5 : 0.0);
      se(i, j) = se(j, i) = std::sqrt(var / nd);
    }
  }
  return MomentEstimate{CovarianceMatrix(cov), se};
}

CovarianceMatrix p_function_moments(const GaussianPFunction& pf, std::size_t n,
                                    std::uint64_t seed) {
  return sample_p_function(pf, n, seed).covariance;
}

}  // namespace gauss_sep
