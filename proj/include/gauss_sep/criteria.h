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

// Separability criteria for two-mode Gaussian states: the closed-form
// correlation bound, optimal squeezing, Simon's algebraic condition, the
// partial-transpose eigenvalue test, the probe-vector quadratic forms, the
// DGCZ (Duan-Giedke-Cirac-Zoller) conditions, and an aggregate verdict.
//
// Every criterion returns a signed margin; "holds" means margin >= 0.
//
// The closed forms use D(a, b, t) = a^2 b^2 (1 - t^2)^2 + t (a + b t)(a t + b)
// under a single square root. With X = 2ab(1 + t^2) + t one has the identity
// X^2 - 4 D = t^2 (4a^2 - 1)(4b^2 - 1), which is used to evaluate the bound
// without cancellation; it also makes the t -> 0 limit explicit.

#ifndef GAUSS_SEP_CRITERIA_H_
#define GAUSS_SEP_CRITERIA_H_

#include <optional>
#include <string_view>

#include "gauss_sep/gaussian_state.h"
#include "gauss_sep/smallmat.h"

namespace gauss_sep {

/// Sign of the second J block in V + (i/2) diag(J, +-J). kPlus is the
/// uncertainty relation, kMinus the partially transposed state.
enum class PeresSign { kPlus, kMinus };

struct BoundResult {
  double c1_max = 0.0;
  double sqrt_d = 0.0;
  /// [2ab(1 + t^2) + t] - 2 sqrt(D), clamped at 0.
  double numerator = 0.0;
};

struct OptimalSqueeze {
  double r1 = 0.0;
  double r2 = 0.0;
  /// Boundary equation residuals at (r1, r2). At t = 0 the first one is
  /// evaluated with the 1/t^2 cleared.
  double residual_22 = 0.0;
  double residual_23 = 0.0;
};

struct BoundaryResiduals {
  double res22 = 0.0;
  double res23 = 0.0;
  /// Magnitude of the largest term in each equation, for relative checks.
  double scale22 = 0.0;
  double scale23 = 0.0;
};

/// Block-wise |c1| ceilings of V - I/2 >= 0 for the squeezed standard form.
struct PRepExpressions {
  double expr_q = 0.0;
  double expr_p = 0.0;  // +inf at t = 0 when the p block is admissible
  bool q_clamped = false;
  bool p_clamped = false;
  double admissible() const { return expr_q < expr_p ? expr_q : expr_p; }
};

struct RadicalMargin {
  double value = 0.0;
  bool valid = true;  // false when a radicand was clamped at 0
};

/// Four real 2-vectors forming the complex probe (d + i g, f + i h).
struct Probe {
  Vec2 d{};
  Vec2 f{};
  Vec2 g{};
  Vec2 h{};
};

enum class Verdict { kSeparable, kEntangled, kUnphysical, kBoundary };

std::string_view verdict_name(Verdict v);

struct SeparabilityReport {
  double tol = kDefaultPsdTol;
  PsdMargin physical;
  PsdMargin ppt_full;
  std::optional<StandardForm> standard_form;
  std::optional<double> t;
  double simon_det_margin = 0.0;
  BoundResult explicit_bound;
  double explicit_bound_margin = 0.0;  // c1_max - |c1|
  double dgcz16_margin = 0.0;
  RadicalMargin dgcz26_margin;
  std::optional<OptimalSqueeze> optimal_squeeze;
  PsdMargin p_rep_after_optimal_squeeze;
  Verdict verdict = Verdict::kUnphysical;
  /// Explicit bound, PPT and P-representation verdicts agree (checked only
  /// outside the boundary band).
  bool criteria_agree = true;
};

/// a^2 b^2 (1 - t^2)^2 + t (a + b t)(a t + b). Requires a, b >= 1/2 and
/// t in [0, 1].
double d_polynomial(double a, double b, double t);

/// Largest separable |c1| for standard-form parameters (a, b, t = |c2/c1|).
BoundResult explicit_bound(double a, double b, double t);

/// explicit_bound with a caller-supplied value of the D polynomial. Exists
/// so verification can perturb D and confirm the checks notice.
BoundResult explicit_bound_with_d(double a, double b, double t, double d);

/// Closed-form squeezing (r1, r2) maximizing the P-representable |c1|.
OptimalSqueeze optimal_squeezing(double a, double b, double t);
OptimalSqueeze optimal_squeezing_with_d(double a, double b, double t,
                                        double d);

/// res22 = (a - 1/(2 r1))(b - 1/(2 r2)) - (a - r1/2)(b - r2/2) / t^2,
/// res23 = (a r1 - 1/2)(b/r2 - 1/2) - (b r2 - 1/2)(a/r1 - 1/2).
/// t must be in (0, 1].
BoundaryResiduals boundary_residuals(double a, double b, double t, double r1,
                                     double r2);

PRepExpressions p_rep_bound_expressions(double a, double b, double t,
                                        double r1, double r2);

/// 4(ab - c1^2)(ab - c2^2) - [(a^2 + b^2) + 2|c1 c2| - 1/4].
double simon_det_criterion(const StandardForm& sf);

/// det[V + (i/2) diag(J, +-J)].
double ppt_det(const CovarianceMatrix& v, PeresSign sign);

/// Positivity of the partially transposed state; for two modes this is
/// equivalent to separability.
PsdMargin ppt_full(const CovarianceMatrix& v, double tol = kDefaultPsdTol);

/// d^T A d + f^T B f + 2 d^T C f + g^T A g + h^T B h + 2 g^T C h
///   - |d^T J g| - |f^T J h|.
double quadratic_form_margin(const CovarianceMatrix& v, const Probe& p);

/// Expectation w^dagger [V + (i/2) diag(J, +-J)] w for w = (d + i g, f + i h):
/// the quadratic-form left side minus d^T J g minus (+-) f^T J h. Its
/// minimum over unit probes is the smallest eigenvalue of that matrix, and
/// a negative value implies a negative quadratic_form_margin.
double peres_expectation(const CovarianceMatrix& v, const Probe& p,
                         PeresSign sign);

/// Quadratic form with g = J^T d, h = +-J^T f substituted.
double weaker_condition_margin(const CovarianceMatrix& v, const Vec2& d,
                               const Vec2& f, PeresSign sign);

/// sqrt((2a - 1)(2b - 1)) - (|c1| + |c2|). Requires a, b >= 1/2.
double dgcz_standard_margin(const StandardForm& sf);

/// The |c1| ceiling implied by dgcz_standard_margin at ratio t:
/// sqrt((2a - 1)(2b - 1)) / (1 + t).
double dgcz_standard_bound(double a, double b, double t);

/// sqrt((a r1 - 1/2)(b r2 - 1/2)) + sqrt((a/r1 - 1/2)(b/r2 - 1/2))
///   - (sqrt(r1 r2)|c1| + |c2|/sqrt(r1 r2)).
RadicalMargin dgcz_squeezed_margin(const StandardForm& sf, double r1,
                                   double r2);

/// [sqrt((a r1 - 1/2)(b r2 - 1/2)) - sqrt(r1 r2)|c1|]
///   - [sqrt((a/r1 - 1/2)(b/r2 - 1/2)) - |c2|/sqrt(r1 r2)].
RadicalMargin dgcz_extra_residual(const StandardForm& sf, double r1,
                                  double r2);

/// Standard form squeezed by (r1, r2): diagonal (a r1, a/r1, b r2, b/r2),
/// cross entries c1 sqrt(r1 r2) and c2 / sqrt(r1 r2).
CovarianceMatrix squeezed_standard_form(const StandardForm& sf, double r1,
                                        double r2);

/// Runs every criterion. The verdict follows ppt_full; it is kBoundary when
/// |min eigenvalue| <= tol * max(1, scale).
SeparabilityReport separability_verdict(const CovarianceMatrix& v,
                                        double tol = kDefaultPsdTol);

}  // namespace gauss_sep

#endif  // GAUSS_SEP_CRITERIA_H_
