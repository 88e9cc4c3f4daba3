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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "gauss_sep/oracle.h"
#include "gauss_sep/random.h"
#include "gauss_sep/verify.h"

namespace gauss_sep {
namespace {

CovarianceMatrix two_mode_squeezed(double r) {
  const double ch = std::cosh(2 * r) / 2, sh = std::sinh(2 * r) / 2;
  return StandardForm{ch, ch, sh, -sh}.to_covariance();
}

const double kR05 = (0.75 + std::sqrt(1.6875)) / 1.5;  // optimal r at (1,1,.5)

TEST(DPolynomial, Examples) {
  EXPECT_DOUBLE_EQ(d_polynomial(1.5, 2.0, 0.0), 9.0);
  EXPECT_DOUBLE_EQ(d_polynomial(1, 1, 1), 4.0);
  for (double t : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(d_polynomial(0.5, 0.5, t), std::pow(1 + t, 4) / 16, 1e-15);
  }
}

TEST(DPolynomial, RejectsOutOfDomain) {
  EXPECT_THROW(d_polynomial(0.4, 1, 0.5), ContractError);
  EXPECT_THROW(d_polynomial(1, 1, 1.5), ContractError);
  EXPECT_THROW(d_polynomial(1, 1, -0.1), ContractError);
}

TEST(ExplicitBound, Examples) {
  EXPECT_NEAR(explicit_bound(1, 1, 1).c1_max, 0.5, 1e-15);
  EXPECT_NEAR(explicit_bound(1, 1, 0.5).c1_max, 0.6339746, 1e-7);
  EXPECT_NEAR(explicit_bound(1, 1, 0.5).c1_max,
              std::sqrt(3.0 - 2 * std::sqrt(1.6875)), 1e-15);
  EXPECT_NEAR(explicit_bound(1, 1, 0).c1_max, 0.75, 1e-15);
  for (double t : {0.0, 0.3, 0.7, 1.0}) {
    EXPECT_EQ(explicit_bound(0.5, 0.5, t).c1_max, 0.0) << t;
  }
}

TEST(ExplicitBound, ContinuousAtZeroRatio) {
  for (double a : {0.5, 0.75, 1.0, 2.0}) {
    for (double b : {0.5, 1.5, 3.0}) {
      EXPECT_NEAR(explicit_bound(a, b, 1e-9).c1_max,
                  explicit_bound(a, b, 0).c1_max, 1e-8);
    }
  }
}

TEST(ExplicitBound, RejectsOutOfDomain) {
  EXPECT_THROW(explicit_bound(0.3, 1, 0.5), ContractError);
  EXPECT_THROW(explicit_bound(1, 1, 1.1), ContractError);
}

TEST(OptimalSqueezing, Examples) {
  const OptimalSqueeze one = optimal_squeezing(1, 1, 1);
  EXPECT_NEAR(one.r1, 1.0, 1e-15);
  EXPECT_NEAR(one.r2, 1.0, 1e-15);
  const OptimalSqueeze half = optimal_squeezing(1, 1, 0.5);
  EXPECT_NEAR(half.r1, 1.3660254, 1e-7);
  EXPECT_NEAR(half.r2, 1.3660254, 1e-7);
  EXPECT_LT(std::abs(half.residual_22), 1e-12);
  EXPECT_LT(std::abs(half.residual_23), 1e-12);
  for (double a : {0.5, 1.0, 2.5}) {
    for (double b : {0.75, 3.0}) {
      const OptimalSqueeze z = optimal_squeezing(a, b, 0);
      EXPECT_DOUBLE_EQ(z.r1, 2 * a);
      EXPECT_DOUBLE_EQ(z.r2, 2 * b);
    }
  }
}

TEST(OptimalSqueezing, StaysInClaimedRange) {
  for (double a : grid_ab_values())
    for (double b : grid_ab_values())
      for (double t : grid_t_values()) {
        const OptimalSqueeze o = optimal_squeezing(a, b, t);
        EXPECT_GE(o.r1, 1.0 - 1e-12);
        EXPECT_LE(o.r1, 2 * a + 1e-12);
        EXPECT_GE(o.r2, 1.0 - 1e-12);
        EXPECT_LE(o.r2, 2 * b + 1e-12);
      }
}

TEST(BoundaryResiduals, Examples) {
  const BoundaryResiduals ones = boundary_residuals(1, 1, 1, 1, 1);
  EXPECT_EQ(ones.res22, 0.0);
  EXPECT_EQ(ones.res23, 0.0);
  const BoundaryResiduals opt = boundary_residuals(1, 1, 0.5, kR05, kR05);
  EXPECT_LT(std::abs(opt.res22), 1e-10);
  EXPECT_LT(std::abs(opt.res23), 1e-10);
  EXPECT_NEAR(boundary_residuals(1, 1, 0.5, 1, 1).res22, -0.75, 1e-15);
  EXPECT_THROW(boundary_residuals(1, 1, 0, 2, 2), ContractError);
}

TEST(PRepBoundExpressions, Examples) {
  const PRepExpressions opt = p_rep_bound_expressions(1, 1, 0.5, kR05, kR05);
  EXPECT_NEAR(opt.expr_q, 0.6339746, 1e-7);
  EXPECT_NEAR(opt.expr_p, 0.6339746, 1e-7);
  const PRepExpressions flat = p_rep_bound_expressions(1, 1, 0.5, 1, 1);
  EXPECT_NEAR(flat.expr_q, 0.5, 1e-15);
  EXPECT_NEAR(flat.expr_p, 1.0, 1e-15);
  EXPECT_NEAR(flat.admissible(), 0.5, 1e-15);
  for (double t : {0.2, 0.6, 1.0}) {
    EXPECT_NEAR(p_rep_bound_expressions(1.5, 0.75, t, 3.0, 1.5).expr_p, 0.0,
                1e-15);
  }
  EXPECT_TRUE(std::isinf(p_rep_bound_expressions(1.5, 0.75, 0, 3.0, 1.5).expr_p));
}

TEST(PRepBoundExpressions, TripleEqualityAtOptimum) {
  for (double a : grid_ab_values())
    for (double b : grid_ab_values())
      for (double t : grid_t_values()) {
        if (t == 0.0) continue;
        const OptimalSqueeze o = optimal_squeezing(a, b, t);
        const PRepExpressions e = p_rep_bound_expressions(a, b, t, o.r1, o.r2);
        const double bound = explicit_bound(a, b, t).c1_max;
        EXPECT_NEAR(e.expr_q, bound, 1e-9) << a << " " << b << " " << t;
        EXPECT_NEAR(e.expr_p, bound, 1e-9) << a << " " << b << " " << t;
      }
}

TEST(PRepBoundExpressions, ClosedFormIsTheMaximum) {
  RandomStream rng(41);
  for (int k = 0; k < 20000; ++k) {
    const double a = rng.uniform(0.5, 3), b = rng.uniform(0.5, 3);
    const double t = rng.uniform(0, 1);
    const double r1 = std::exp(rng.uniform(-2, 2.5));
    const double r2 = std::exp(rng.uniform(-2, 2.5));
    EXPECT_LE(p_rep_bound_expressions(a, b, t, r1, r2).admissible(),
              explicit_bound(a, b, t).c1_max + 1e-9);
  }
}

TEST(SimonDetCriterion, Examples) {
  EXPECT_DOUBLE_EQ(simon_det_criterion({1, 1, 0, 0}), 2.25);
  EXPECT_NEAR(simon_det_criterion({1, 1, 0.75, 0}), 0.0, 1e-15);
  EXPECT_NEAR(simon_det_criterion({0.5, 0.5, 0, 0}), 0.0, 1e-15);
}

TEST(SimonDetCriterion, AgreesWithExplicitBoundOnGrid) {
  for (double a : grid_ab_values())
    for (double b : grid_ab_values())
      for (double t : grid_t_values()) {
        const double c = explicit_bound(a, b, t).c1_max;
        if (c <= 0.0) continue;
        for (double s : {0.25, 0.5, 0.9, 0.999}) {
          EXPECT_GE(simon_det_criterion({a, b, s * c, -t * s * c}), 0.0)
              << a << " " << b << " " << t << " " << s;
        }
        EXPECT_NEAR(simon_det_criterion({a, b, c, -t * c}), 0.0,
                    1e-9 * (1 + std::pow(std::max(a, b), 4)));
        for (double s : {1.001, 1.05}) {
          EXPECT_LT(simon_det_criterion({a, b, s * c, -t * s * c}), 0.0)
              << a << " " << b << " " << t << " " << s;
        }
      }
}

TEST(PptDet, Examples) {
  EXPECT_NEAR(ppt_det(CovarianceMatrix(0.5 * Mat4::identity()),
                      PeresSign::kPlus),
              0.0, 1e-15);
  EXPECT_NEAR(ppt_det(CovarianceMatrix(Mat4::identity()), PeresSign::kPlus),
              9.0 / 16, 1e-15);
}

TEST(PptFull, Examples) {
  EXPECT_TRUE(ppt_full(CovarianceMatrix(Mat4::diagonal({1, 2, 0.7, 3}))).is_psd);
  EXPECT_FALSE(ppt_full(two_mode_squeezed(0.5)).is_psd);
  EXPECT_TRUE(ppt_full(StandardForm{1, 1, 0.5, -0.5}.to_covariance()).is_psd);
}

TEST(QuadraticFormMargin, Examples) {
  const CovarianceMatrix id(Mat4::identity());
  EXPECT_EQ(quadratic_form_margin(id, Probe{}), 0.0);
  EXPECT_DOUBLE_EQ(quadratic_form_margin(id, Probe{{1, 0}, {0, 0}, {0, 1}, {0, 0}}),
                   1.0);
  const Probe epr{{1, 0}, {-1, 0}, {0, 1}, {0, 1}};
  EXPECT_LT(quadratic_form_margin(two_mode_squeezed(0.5), epr), 0.0);
}

TEST(PeresExpectation, MatchesHermitianForm) {
  RandomStream rng(43);
  for (int k = 0; k < 200; ++k) {
    const CovarianceMatrix v = random_physical_covariance(rng);
    Probe p;
    for (Vec2* x : {&p.d, &p.f, &p.g, &p.h})
      for (double& c : *x) c = rng.normal();
    for (PeresSign sign : {PeresSign::kPlus, PeresSign::kMinus}) {
      const Mat4 om = sign == PeresSign::kPlus
                          ? SymplecticForm::omega()
                          : SymplecticForm::omega_transposed();
      const HermMat4 m = HermMat4::from_parts(v.matrix(), 0.5 * om);
      const std::array<std::complex<double>, 4> w{
          {{p.d[0], p.g[0]}, {p.d[1], p.g[1]}, {p.f[0], p.h[0]},
           {p.f[1], p.h[1]}}};
      std::complex<double> e = 0.0;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) e += std::conj(w[r]) * m(r, c) * w[c];
      EXPECT_NEAR(peres_expectation(v, p, sign), e.real(),
                  1e-11 * (1 + std::abs(e.real())));
      EXPECT_LE(quadratic_form_margin(v, p),
                peres_expectation(v, p, sign) + 1e-12);
    }
  }
}

TEST(WeakerConditionMargin, Examples) {
  const CovarianceMatrix id(Mat4::identity());
  EXPECT_EQ(weaker_condition_margin(id, {0, 0}, {0, 0}, PeresSign::kPlus), 0.0);
  const double s = std::sqrt(0.5);
  EXPECT_NEAR(weaker_condition_margin(id, {s, s}, {0, 0}, PeresSign::kMinus),
              1.0, 1e-15);
}

TEST(WeakerConditionMargin, EqualsQuadraticFormAtSubstitutedVectors) {
  RandomStream rng(47);
  const Mat2 jt = SymplecticForm::j().transpose();
  for (int k = 0; k < 500; ++k) {
    const CovarianceMatrix v = random_physical_covariance(rng);
    const Vec2 d{rng.normal(), rng.normal()};
    const Vec2 f{rng.normal(), rng.normal()};
    for (PeresSign sign : {PeresSign::kPlus, PeresSign::kMinus}) {
      const double sg = sign == PeresSign::kPlus ? 1.0 : -1.0;
      const Vec2 g = jt * d;
      Vec2 h = jt * f;
      for (double& x : h) x *= sg;
      const double q = quadratic_form_margin(v, Probe{d, f, g, h});
      EXPECT_NEAR(weaker_condition_margin(v, d, f, sign), q,
                  1e-12 * (1 + std::abs(q)));
    }
  }
}

TEST(DgczStandardMargin, Examples) {
  EXPECT_DOUBLE_EQ(dgcz_standard_margin({1, 1, 0, 0}), 1.0);
  EXPECT_NEAR(dgcz_standard_margin({1, 1, 2.0 / 3, 1.0 / 3}), 0.0, 1e-15);
  for (double a : {0.5, 0.75, 1.0, 2.0, 3.0}) {
    EXPECT_NEAR((2 * a - 1) / 2, explicit_bound(a, a, 1).c1_max, 1e-12) << a;
    const double c = (2 * a - 1) / 2;
    EXPECT_NEAR(dgcz_standard_margin({a, a, c, c}), 0.0, 1e-12);
  }
  EXPECT_THROW(dgcz_standard_margin({0.4, 1, 0, 0}), ContractError);
}

TEST(DgczStandardBound, DominatesExplicitBound) {
  for (double a : grid_ab_values())
    for (double b : grid_ab_values())
      for (double t : grid_t_values()) {
        const double gap =
            dgcz_standard_bound(a, b, t) - explicit_bound(a, b, t).c1_max;
        EXPECT_GE(gap, -1e-10);
        if (t == 1.0) EXPECT_LE(std::abs(gap), 1e-10);
      }
}

TEST(DgczSqueezedMargin, Examples) {
  for (double c1 : {0.0, 0.2, 0.4}) {
    for (double c2 : {-0.3, 0.1}) {
      const RadicalMargin m = dgcz_squeezed_margin({1, 1, c1, c2}, 1, 1);
      EXPECT_TRUE(m.valid);
      EXPECT_NEAR(m.value, 1 - (std::abs(c1) + std::abs(c2)), 1e-15);
    }
  }
  const OptimalSqueeze o = optimal_squeezing(1, 1, 0.5);
  const double c = explicit_bound(1, 1, 0.5).c1_max;
  EXPECT_NEAR(dgcz_squeezed_margin({1, 1, c, 0.5 * c}, o.r1, o.r2).value, 0.0,
              1e-12);
  EXPECT_NEAR(dgcz_squeezed_margin({0.5, 0.5, 0, 0}, 1, 1).value, 0.0, 1e-15);
  EXPECT_FALSE(dgcz_squeezed_margin({0.5, 0.5, 0, 0}, 0.5, 0.5).valid);
}

TEST(DgczExtraResidual, Examples) {
  const OptimalSqueeze o = optimal_squeezing(1, 1, 0.5);
  const double c = explicit_bound(1, 1, 0.5).c1_max;
  EXPECT_NEAR(dgcz_extra_residual({1, 1, c, -0.5 * c}, o.r1, o.r2).value, 0.0,
              1e-12);
  EXPECT_NEAR(dgcz_extra_residual({1, 1, 0, 0}, 1, 1).value, 0.0, 1e-15);
  EXPECT_NEAR(dgcz_extra_residual({1, 1, 0.3, 0.15}, 1, 1).value, -0.15,
              1e-15);
}

TEST(SeparabilityVerdict, Identity) {
  const SeparabilityReport rep =
      separability_verdict(CovarianceMatrix(Mat4::identity()));
  EXPECT_EQ(rep.verdict, Verdict::kSeparable);
  EXPECT_GT(rep.simon_det_margin, 0);
  EXPECT_GT(rep.explicit_bound_margin, 0);
  EXPECT_GT(rep.dgcz16_margin, 0);
  EXPECT_TRUE(rep.p_rep_after_optimal_squeeze.is_psd);
  EXPECT_NEAR(rep.p_rep_after_optimal_squeeze.min_eigenvalue, 0.0, 1e-15);
  EXPECT_TRUE(rep.criteria_agree);
}

TEST(SeparabilityVerdict, TwoModeSqueezedVacuum) {
  const SeparabilityReport rep = separability_verdict(two_mode_squeezed(0.5));
  EXPECT_EQ(rep.verdict, Verdict::kEntangled);
  EXPECT_FALSE(rep.p_rep_after_optimal_squeeze.is_psd);
  EXPECT_LT(rep.explicit_bound_margin, 0);
  EXPECT_TRUE(rep.criteria_agree);
}

TEST(SeparabilityVerdict, AtAndJustInsideExplicitBound) {
  const double c = explicit_bound(1, 1, 0.5).c1_max;
  const SeparabilityReport at =
      separability_verdict(StandardForm{1, 1, c, -0.5 * c}.to_covariance());
  EXPECT_EQ(at.verdict, Verdict::kBoundary);
  const SeparabilityReport inside = separability_verdict(
      StandardForm{1, 1, 0.6339, -0.31695}.to_covariance());
  EXPECT_EQ(inside.verdict, Verdict::kSeparable);
  EXPECT_TRUE(inside.criteria_agree);
  const SeparabilityReport outside = separability_verdict(
      StandardForm{1, 1, 0.6341, -0.31705}.to_covariance());
  EXPECT_EQ(outside.verdict, Verdict::kEntangled);
  EXPECT_TRUE(outside.criteria_agree);
}

TEST(SeparabilityVerdict, UnphysicalAndVacuum) {
  EXPECT_EQ(separability_verdict(CovarianceMatrix(0.25 * Mat4::identity()))
                .verdict,
            Verdict::kUnphysical);
  EXPECT_EQ(
      separability_verdict(CovarianceMatrix(0.5 * Mat4::identity())).verdict,
      Verdict::kBoundary);
}

TEST(SeparabilityVerdict, InvariantUnderLocalSymplectics) {
  RandomStream rng(53);
  int compared = 0;
  for (int k = 0; k < 500; ++k) {
    const CovarianceMatrix v = random_physical_covariance(rng);
    const SeparabilityReport base = separability_verdict(v);
    const SeparabilityReport moved =
        separability_verdict(apply_symplectic(v, random_local_symplectic(rng)));
    if (base.verdict == Verdict::kBoundary ||
        moved.verdict == Verdict::kBoundary ||
        std::abs(base.ppt_full.min_eigenvalue) < 1e-8) {
      continue;
    }
    ++compared;
    EXPECT_EQ(base.verdict, moved.verdict);
    EXPECT_TRUE(base.criteria_agree);
  }
  EXPECT_GT(compared, 400);
}

TEST(VerdictName, Names) {
  EXPECT_EQ(verdict_name(Verdict::kSeparable), "Separable");
  EXPECT_EQ(verdict_name(Verdict::kEntangled), "Entangled");
  EXPECT_EQ(verdict_name(Verdict::kUnphysical), "Unphysical");
  EXPECT_EQ(verdict_name(Verdict::kBoundary), "Boundary");
}

}  // namespace
}  // namespace gauss_sep
