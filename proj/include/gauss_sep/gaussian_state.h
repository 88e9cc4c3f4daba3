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

// Two-mode Gaussian covariance matrices in (q1, p1, q2, p2) ordering with
// vacuum variance 1/2.

#ifndef GAUSS_SEP_GAUSSIAN_STATE_H_
#define GAUSS_SEP_GAUSSIAN_STATE_H_

#include <cstdint>
#include <optional>

#include "gauss_sep/smallmat.h"

namespace gauss_sep {

/// Symmetric 4x4 second-moment matrix V = [[A, C], [C^T, B]].
class CovarianceMatrix {
 public:
  /// Throws ContractError unless v is symmetric within 1e-12 relative; the
  /// stored matrix is (v + v^T) / 2.
  explicit CovarianceMatrix(const Mat4& v);

  static CovarianceMatrix from_blocks(const Mat2& a, const Mat2& b,
                                      const Mat2& c);

  const Mat4& matrix() const { return v_; }
  double operator()(std::size_t r, std::size_t c) const { return v_(r, c); }

  Mat2 a_block() const;  // mode 1
  Mat2 b_block() const;  // mode 2
  Mat2 c_block() const;  // cross correlations <q1 q2>, <q1 p2>, ...

  friend bool operator==(const CovarianceMatrix&,
                         const CovarianceMatrix&) = default;

 private:
  Mat4 v_;
};

/// The symplectic form Omega = diag(J, J), J = [[0, 1], [-1, 0]].
struct SymplecticForm {
  static Mat2 j();
  static Mat4 omega();
  /// diag(J, -J): the form seen by the partially transposed state.
  static Mat4 omega_transposed();
};

/// Four-parameter canonical shape
///
///   [[a, 0, c1, 0], [0, a, 0, c2], [c1, 0, b, 0], [0, c2, 0, b]]
///
/// with canonical orientation c1 >= |c2| >= 0 when produced by
/// to_standard_form. c2 keeps the sign of det C.
struct StandardForm {
  double a = 0.0;
  double b = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  /// |c2 / c1|; absent when c1 == 0.
  std::optional<double> t() const;

  CovarianceMatrix to_covariance() const;

  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

/// Strictly positive squeezing parameters (r1, r2).
class SqueezeParams {
 public:
  SqueezeParams(double r1, double r2);
  double r1() const { return r1_; }
  double r2() const { return r2_; }

 private:
  double r1_;
  double r2_;
};

/// S = diag(s1, s2) with det s1 = det s2 = 1.
class LocalSymplectic {
 public:
  /// Throws ContractError unless both determinants are 1 within 1e-10.
  LocalSymplectic(const Mat2& s1, const Mat2& s2);

  static LocalSymplectic identity();
  /// Phase-space rotations by theta1 on mode 1 and theta2 on mode 2.
  static LocalSymplectic rotation(double theta1, double theta2);
  /// diag(sqrt(r1), 1/sqrt(r1)) (+) diag(sqrt(r2), 1/sqrt(r2)); maps a
  /// standard form to the squeezed matrix with diagonal (a r1, a/r1, b r2, b/r2).
  static LocalSymplectic squeeze(const SqueezeParams& r);

  const Mat2& s1() const { return s1_; }
  const Mat2& s2() const { return s2_; }
  Mat4 full() const;
  LocalSymplectic inverse() const;

  /// (this * other): apply `other` first.
  LocalSymplectic then_after(const LocalSymplectic& other) const;

 private:
  Mat2 s1_;
  Mat2 s2_;
};

/// Gaussian weight of the P-representation:
/// P(x) = sqrt(det P) / (4 pi^2) exp(-x^T P x / 2).
struct GaussianPFunction {
  Mat4 precision;
  Vec4 mean{};
  double norm_factor = 0.0;

  /// Covariance of the weight, precision^{-1} = V - I/2.
  Mat4 weight_covariance() const;
  double density(const Vec4& x) const;
};

/// Sample moments of a P-function together with their standard errors.
struct MomentEstimate {
  CovarianceMatrix covariance;
  Mat4 standard_error;  // per-entry standard error of the sample covariance
};

/// Bona fide covariance check: V + (i/2) diag(J, J) >= 0.
PsdMargin is_physical(const CovarianceMatrix& v, double tol = kDefaultPsdTol);

/// Lambda V Lambda with Lambda = diag(1, 1, 1, -1) (momentum reversal on
/// mode 2). An exact involution.
CovarianceMatrix partial_transpose(const CovarianceMatrix& v);

/// S V S^T.
CovarianceMatrix apply_symplectic(const CovarianceMatrix& v,
                                  const LocalSymplectic& s);

struct StandardFormReduction {
  StandardForm form;
  LocalSymplectic transform;  // apply_symplectic(v, transform) == form
};

/// Reduces a physical covariance matrix to standard form by local
/// rotations and squeezers. Throws UnphysicalStateError otherwise.
StandardFormReduction to_standard_form(const CovarianceMatrix& v,
                                       double tol = kDefaultPsdTol);

/// V - I/2 >= 0.
PsdMargin p_condition(const CovarianceMatrix& v, double tol = kDefaultPsdTol);

inline constexpr double kStrictRepresentabilityTol = 1e-8;

/// Requires min eig(V - I/2) >= 1e-8, else RepresentationError.
GaussianPFunction build_p_function(const CovarianceMatrix& v);

/// Draws n samples from the P-function weight and returns the sample
/// covariance plus I/2. Deterministic for a fixed seed. n >= 1000.
CovarianceMatrix p_function_moments(const GaussianPFunction& pf, std::size_t n,
                                    std::uint64_t seed);

/// As p_function_moments, also returning per-entry standard errors.
MomentEstimate sample_p_function(const GaussianPFunction& pf, std::size_t n,
                                 std::uint64_t seed);

}  // namespace gauss_sep

#endif  // GAUSS_SEP_GAUSSIAN_STATE_H_
