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

#include "gauss_sep/criteria.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gauss_sep {
namespace {

constexpr double kDomainSlack = 1e-12;

struct Domain {
  double a;
  double b;
  double t;
};

// Validates a, b >= 1/2, t in [0, 1] up to rounding slack, then clamps.
Domain checked_domain(const char* op, double a, double b, double t) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(t) ||
      a < 0.5 - kDomainSlack || b < 0.5 - kDomainSlack || t < -kDomainSlack ||
      t > 1.0 + kDomainSlack) {
    std::ostringstream os;
    os << op << ": parameters out of domain (a = " << a << ", b = " << b
       << ", t = " << t << "); need a, b >= 1/2 and 0 <= t <= 1";
    throw ContractError(os.str());
  }
  return Domain{std::max(a, 0.5), std::max(b, 0.5), std::clamp(t, 0.0, 1.0)};
}

void check_squeeze(const char* op, double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 > 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) {
    throw ContractError(std::string(op) +
                        ": squeezing parameters must be finite and positive");
  }
}

double bilinear(const Vec2& x, const Mat2& m, const Vec2& y) {
  const Vec2 my = m * y;
  return x[0] * my[0] + x[1] * my[1];
}

double dot(const Vec2& x, const Vec2& y) { return x[0] * y[0] + x[1] * y[1]; }

// (4 x^2 - 1) without cancellation near x = 1/2.
double four_sq_minus_one(double x) { return (2.0 * x - 1.0) * (2.0 * x + 1.0); }

// x * r - 1/2 evaluated at the optimal r, where r = s / den with
// s = ab(1 - t^2) + sqrt(D). u = x^2 y (1 - t^2) - den / 2; the product
// x^2 D - u^2 equals (4x^2 - 1) den^2 / 4 plus x^2 times any excess of d
// over the polynomial. Returns the optimal r itself.
double optimal_ratio(double x, double den, double u, double sqrt_d,
                     double s, double excess) {
  if (u >= 0.0) return s / den;
  const double gap = four_sq_minus_one(x) * den * den / 4.0 + x * x * excess;
  return (0.5 + gap / (den * (x * sqrt_d - u))) / x;
}

struct Radicals {
  double q = 0.0;  // sqrt((a r1 - 1/2)(b r2 - 1/2))
  double p = 0.0;  // sqrt((a/r1 - 1/2)(b/r2 - 1/2))
  bool q_clamped = false;
  bool p_clamped = false;
};

Radicals squeezed_radicals(double a, double b, double r1, double r2) {
  Radicals out;
  const double q1 = a * r1 - 0.5;
  const double q2 = b * r2 - 0.5;
  const double p1 = a / r1 - 0.5;
  const double p2 = b / r2 - 0.5;
  out.q_clamped = q1 < 0.0 || q2 < 0.0;
  out.p_clamped = p1 < 0.0 || p2 < 0.0;
  out.q = std::sqrt(std::max(0.0, q1) * std::max(0.0, q2));
  out.p = std::sqrt(std::max(0.0, p1) * std::max(0.0, p2));
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kSeparable:
      return "Separable";
    case Verdict::kEntangled:
      return "Entangled";
    case Verdict::kUnphysical:
      return "Unphysical";
    case Verdict::kBoundary:
      return "Boundary";
  }
  return "Unknown";
}

double d_polynomial(double a, double b, double t) {
  const Domain d = checked_domain("d_polynomial", a, b, t);
  const double one_minus = 1.0 - d.t * d.t;
  return d.a * d.a * d.b * d.b * one_minus * one_minus +
         d.t * (d.a + d.b * d.t) * (d.a * d.t + d.b);
}

BoundResult explicit_bound(double a, double b, double t) {
  return explicit_bound_with_d(a, b, t, d_polynomial(a, b, t));
}

BoundResult explicit_bound_with_d(double a, double b, double t, double d) {
  const Domain dom = checked_domain("explicit_bound", a, b, t);
  const double excess = d - d_polynomial(dom.a, dom.b, dom.t);
  const double x = 2.0 * dom.a * dom.b * (1.0 + dom.t * dom.t) + dom.t;

  BoundResult out;
  out.sqrt_d = std::sqrt(std::max(0.0, d));
  // (X^2 - 4D) / t^2; at t = 0 this is the analytic limit.
  double reduced = four_sq_minus_one(dom.a) * four_sq_minus_one(dom.b);
  if (dom.t > 0.0) reduced -= 4.0 * excess / (dom.t * dom.t);
  reduced = std::max(0.0, reduced);
  const double denom = x + 2.0 * out.sqrt_d;
  out.numerator = dom.t * dom.t * reduced / denom;
  out.c1_max = 0.5 * std::sqrt(reduced / denom);
  return out;
}

OptimalSqueeze optimal_squeezing(double a, double b, double t) {
  return optimal_squeezing_with_d(a, b, t, d_polynomial(a, b, t));
}

OptimalSqueeze optimal_squeezing_with_d(double a, double b, double t,
                                        double d) {
  const Domain dom = checked_domain("optimal_squeezing", a, b, t);
  OptimalSqueeze out;
  if (dom.t == 0.0) {
    out.r1 = 2.0 * dom.a;
    out.r2 = 2.0 * dom.b;
    // First residual with 1/t^2 cleared.
    out.residual_22 = -(dom.a - 0.5 * out.r1) * (dom.b - 0.5 * out.r2);
    out.residual_23 =
        (dom.a * out.r1 - 0.5) * (dom.b / out.r2 - 0.5) -
        (dom.b * out.r2 - 0.5) * (dom.a / out.r1 - 0.5);
    return out;
  }
  const double excess = d - d_polynomial(dom.a, dom.b, dom.t);
  const double sqrt_d = std::sqrt(std::max(0.0, d));
  const double one_minus = 1.0 - dom.t * dom.t;
  const double s = dom.a * dom.b * one_minus + sqrt_d;
  const double den1 = dom.a * dom.t + dom.b;
  const double den2 = dom.a + dom.b * dom.t;
  const double u1 = dom.a * dom.a * dom.b * one_minus - 0.5 * den1;
  const double u2 = dom.a * dom.b * dom.b * one_minus - 0.5 * den2;
  out.r1 = optimal_ratio(dom.a, den1, u1, sqrt_d, s, excess);
  out.r2 = optimal_ratio(dom.b, den2, u2, sqrt_d, s, excess);
  const BoundaryResiduals res =
      boundary_residuals(dom.a, dom.b, dom.t, out.r1, out.r2);
  out.residual_22 = res.res22;
  out.residual_23 = res.res23;
  return out;
}

BoundaryResiduals boundary_residuals(double a, double b, double t, double r1,
                                     double r2) {
  check_squeeze("boundary_residuals", r1, r2);
  if (!(t > 0.0) || t > 1.0 + kDomainSlack) {
    throw ContractError(
        "boundary_residuals: t must lie in (0, 1]; use the t = 0 closed forms");
  }
  BoundaryResiduals out;
  const double lhs22 = (a - 0.5 / r1) * (b - 0.5 / r2);
  const double rhs22 = (a - 0.5 * r1) * (b - 0.5 * r2) / (t * t);
  out.res22 = lhs22 - rhs22;
  out.scale22 = std::max(std::abs(lhs22), std::abs(rhs22));
  const double lhs23 = (a * r1 - 0.5) * (b / r2 - 0.5);
  const double rhs23 = (b * r2 - 0.5) * (a / r1 - 0.5);
  out.res23 = lhs23 - rhs23;
  out.scale23 = std::max(std::abs(lhs23), std::abs(rhs23));
  return out;
}

PRepExpressions p_rep_bound_expressions(double a, double b, double t,
                                        double r1, double r2) {
  check_squeeze("p_rep_bound_expressions", r1, r2);
  const Radicals rad = squeezed_radicals(a, b, r1, r2);
  const double root = std::sqrt(r1 * r2);
  PRepExpressions out;
  out.q_clamped = rad.q_clamped;
  out.p_clamped = rad.p_clamped;
  out.expr_q = rad.q / root;
  if (t > 0.0) {
    out.expr_p = rad.p * root / t;
  } else {
    // c2 = 0: the p block only needs nonnegative diagonals.
    out.expr_p = rad.p_clamped ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return out;
}

double simon_det_criterion(const StandardForm& sf) {
  const double ab = sf.a * sf.b;
  return 4.0 * (ab - sf.c1 * sf.c1) * (ab - sf.c2 * sf.c2) -
         ((sf.a * sf.a + sf.b * sf.b) + 2.0 * std::abs(sf.c1 * sf.c2) - 0.25);
}

double ppt_det(const CovarianceMatrix& v, PeresSign sign) {
  const Mat4 omega = sign == PeresSign::kPlus
                         ? SymplecticForm::omega()
                         : SymplecticForm::omega_transposed();
  return det4(HermMat4::from_parts(v.matrix(), 0.5 * omega));
}

PsdMargin ppt_full(const CovarianceMatrix& v, double tol) {
  return is_physical(partial_transpose(v), tol);
}

namespace {

double quadratic_lhs(const CovarianceMatrix& v, const Probe& p) {
  const Mat2 a = v.a_block();
  const Mat2 b = v.b_block();
  const Mat2 c = v.c_block();
  return bilinear(p.d, a, p.d) + bilinear(p.f, b, p.f) +
         2.0 * bilinear(p.d, c, p.f) + bilinear(p.g, a, p.g) +
         bilinear(p.h, b, p.h) + 2.0 * bilinear(p.g, c, p.h);
}

}  // namespace

double quadratic_form_margin(const CovarianceMatrix& v, const Probe& p) {
  const Mat2 j = SymplecticForm::j();
  return quadratic_lhs(v, p) - std::abs(bilinear(p.d, j, p.g)) -
         std::abs(bilinear(p.f, j, p.h));
}

double peres_expectation(const CovarianceMatrix& v, const Probe& p,
                         PeresSign sign) {
  const Mat2 j = SymplecticForm::j();
  const double s = sign == PeresSign::kPlus ? 1.0 : -1.0;
  return quadratic_lhs(v, p) - bilinear(p.d, j, p.g) -
         s * bilinear(p.f, j, p.h);
}

double weaker_condition_margin(const CovarianceMatrix& v, const Vec2& d,
                               const Vec2& f, PeresSign sign) {
  const Mat2 a = v.a_block();
  const Mat2 b = v.b_block();
  const Mat2 c = v.c_block();
  const Mat2 j = SymplecticForm::j();
  const Mat2 jt = j.transpose();
  const double s = sign == PeresSign::kPlus ? 1.0 : -1.0;
  return bilinear(d, a, d) + bilinear(f, b, f) + 2.0 * bilinear(d, c, f) +
         bilinear(d, j * a * jt, d) + bilinear(f, j * b * jt, f) +
         s * 2.0 * bilinear(d, j * c * jt, f) - (dot(d, d) + dot(f, f));
}

double dgcz_standard_margin(const StandardForm& sf) {
  if (sf.a < 0.5 - kDomainSlack || sf.b < 0.5 - kDomainSlack) {
    throw ContractError("dgcz_standard_margin: need a, b >= 1/2");
  }
  const double root =
      std::sqrt(std::max(0.0, (2.0 * sf.a - 1.0) * (2.0 * sf.b - 1.0)));
  return root - (std::abs(sf.c1) + std::abs(sf.c2));
}

double dgcz_standard_bound(double a, double b, double t) {
  const Domain d = checked_domain("dgcz_standard_bound", a, b, t);
  return std::sqrt((2.0 * d.a - 1.0) * (2.0 * d.b - 1.0)) / (1.0 + d.t);
}

RadicalMargin dgcz_squeezed_margin(const StandardForm& sf, double r1,
                                   double r2) {
  check_squeeze("dgcz_squeezed_margin", r1, r2);
  const Radicals rad = squeezed_radicals(sf.a, sf.b, r1, r2);
  const double root = std::sqrt(r1 * r2);
  return RadicalMargin{
      rad.q + rad.p - (root * std::abs(sf.c1) + std::abs(sf.c2) / root),
      !rad.q_clamped && !rad.p_clamped};
}

RadicalMargin dgcz_extra_residual(const StandardForm& sf, double r1,
                                  double r2) {
  check_squeeze("dgcz_extra_residual", r1, r2);
  const Radicals rad = squeezed_radicals(sf.a, sf.b, r1, r2);
  const double root = std::sqrt(r1 * r2);
  return RadicalMargin{(rad.q - root * std::abs(sf.c1)) -
                           (rad.p - std::abs(sf.c2) / root),
                       !rad.q_clamped && !rad.p_clamped};
}

CovarianceMatrix squeezed_standard_form(const StandardForm& sf, double r1,
                                        double r2) {
  return apply_symplectic(sf.to_covariance(),
                          LocalSymplectic::squeeze(SqueezeParams(r1, r2)));
}

SeparabilityReport separability_verdict(const CovarianceMatrix& v, double tol) {
  SeparabilityReport rep;
  rep.tol = tol;
  rep.physical = is_physical(v, tol);
  rep.ppt_full = ppt_full(v, tol);
  if (!rep.physical.is_psd) {
    rep.verdict = Verdict::kUnphysical;
    rep.criteria_agree = true;
    return rep;
  }

  const StandardForm sf = to_standard_form(v, tol).form;
  rep.standard_form = sf;
  rep.t = sf.t();
  // c1 = 0 forces c2 = 0 in canonical orientation; the t = 0 formulas apply.
  const double t = rep.t.value_or(0.0);
  const double a = std::max(sf.a, 0.5);
  const double b = std::max(sf.b, 0.5);

  rep.simon_det_margin = simon_det_criterion(sf);
  rep.explicit_bound = explicit_bound(a, b, t);
  rep.explicit_bound_margin = rep.explicit_bound.c1_max - std::abs(sf.c1);
  rep.dgcz16_margin = dgcz_standard_margin(StandardForm{a, b, sf.c1, sf.c2});

  const OptimalSqueeze opt = optimal_squeezing(a, b, t);
  rep.optimal_squeeze = opt;
  rep.dgcz26_margin = dgcz_squeezed_margin(sf, opt.r1, opt.r2);
  rep.p_rep_after_optimal_squeeze =
      p_condition(squeezed_standard_form(sf, opt.r1, opt.r2), tol);

  const double band = tol * std::max(1.0, rep.ppt_full.scale);
  if (std::abs(rep.ppt_full.min_eigenvalue) <= band) {
    rep.verdict = Verdict::kBoundary;
  } else {
    rep.verdict =
        rep.ppt_full.is_psd ? Verdict::kSeparable : Verdict::kEntangled;
  }

  rep.criteria_agree = true;
  const double bound_band = 1e-8 * std::max({1.0, a, b});
  if (rep.verdict != Verdict::kBoundary &&
      std::abs(rep.explicit_bound_margin) > bound_band) {
    const bool by_bound = rep.explicit_bound_margin >= 0.0;
    rep.criteria_agree = by_bound == rep.ppt_full.is_psd &&
                         by_bound == rep.p_rep_after_optimal_squeeze.is_psd;
  }
  return rep;
}

}  // namespace gauss_sep
