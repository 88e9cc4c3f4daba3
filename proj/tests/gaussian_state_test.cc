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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gauss_sep/criteria.h"
#include "gauss_sep/oracle.h"
#include "gauss_sep/random.h"

namespace gauss_sep {
namespace {

CovarianceMatrix two_mode_squeezed(double r) {
  const double ch = std::cosh(2 * r) / 2, sh = std::sinh(2 * r) / 2;
  return StandardForm{ch, ch, sh, -sh}.to_covariance();
}

void expect_form_near(const StandardForm& got, const StandardForm& want,
                      double tol) {
  EXPECT_NEAR(got.a, want.a, tol);
  EXPECT_NEAR(got.b, want.b, tol);
  EXPECT_NEAR(got.c1, want.c1, tol);
  EXPECT_NEAR(got.c2, want.c2, tol);
}

TEST(CovarianceMatrix, RejectsAsymmetric) {
  Mat4 m = Mat4::identity();
  m(0, 3) = 0.1;
  EXPECT_THROW(CovarianceMatrix{m}, ContractError);
}

TEST(CovarianceMatrix, BlocksRoundTrip) {
  const Mat2 a({{{1.0, 0.1}, {0.1, 2.0}}});
  const Mat2 b({{{3.0, -0.2}, {-0.2, 1.5}}});
  const Mat2 c({{{0.3, 0.4}, {-0.5, 0.6}}});
  const auto v = CovarianceMatrix::from_blocks(a, b, c);
  EXPECT_EQ(v.a_block(), a);
  EXPECT_EQ(v.b_block(), b);
  EXPECT_EQ(v.c_block(), c);
  EXPECT_DOUBLE_EQ(v(1, 2), -0.5);
}

TEST(IsPhysical, Examples) {
  const PsdMargin vac = is_physical(CovarianceMatrix(0.5 * Mat4::identity()));
  EXPECT_TRUE(vac.is_psd);
  EXPECT_NEAR(vac.min_eigenvalue, 0.0, 1e-15);
  const PsdMargin thermal = is_physical(CovarianceMatrix(Mat4::identity()));
  EXPECT_TRUE(thermal.is_psd);
  EXPECT_NEAR(thermal.min_eigenvalue, 0.5, 1e-15);
  const PsdMargin sub = is_physical(CovarianceMatrix(0.25 * Mat4::identity()));
  EXPECT_FALSE(sub.is_psd);
  EXPECT_NEAR(sub.min_eigenvalue, -0.25, 1e-15);
}

TEST(PartialTranspose, Examples) {
  const CovarianceMatrix diag(Mat4::diagonal({1, 2, 3, 4}));
  EXPECT_EQ(partial_transpose(diag), diag);

  const StandardForm sf{1.2, 0.9, 0.4, 0.3};
  const StandardForm flipped{1.2, 0.9, 0.4, -0.3};
  EXPECT_EQ(partial_transpose(sf.to_covariance()), flipped.to_covariance());

  Mat4 m = Mat4::identity();
  m(0, 2) = m(2, 0) = 0.3;
  m(0, 3) = m(3, 0) = 0.2;
  const CovarianceMatrix pt = partial_transpose(CovarianceMatrix(m));
  EXPECT_DOUBLE_EQ(pt(0, 2), 0.3);
  EXPECT_DOUBLE_EQ(pt(0, 3), -0.2);
}

TEST(PartialTranspose, IsAnInvolution) {
  RandomStream rng(21);
  for (int k = 0; k < 200; ++k) {
    const CovarianceMatrix v = random_physical_covariance(rng);
    EXPECT_EQ(partial_transpose(partial_transpose(v)), v);
  }
}

TEST(ApplySymplectic, Examples) {
  const StandardForm sf{1.3, 0.8, 0.35, -0.2};
  const CovarianceMatrix v = sf.to_covariance();
  EXPECT_EQ(apply_symplectic(v, LocalSymplectic::identity()), v);

  const double r1 = 1.7, r2 = 0.6;
  const CovarianceMatrix sq =
      apply_symplectic(v, LocalSymplectic::squeeze(SqueezeParams(r1, r2)));
  EXPECT_LT(max_abs_diff(sq.matrix(),
                         squeezed_standard_form(sf, r1, r2).matrix()),
            1e-15);
  EXPECT_NEAR(sq(0, 0), sf.a * r1, 1e-15);
  EXPECT_NEAR(sq(1, 1), sf.a / r1, 1e-15);
  EXPECT_NEAR(sq(2, 2), sf.b * r2, 1e-15);
  EXPECT_NEAR(sq(3, 3), sf.b / r2, 1e-15);
  EXPECT_NEAR(sq(0, 2), sf.c1 * std::sqrt(r1 * r2), 1e-15);
  EXPECT_NEAR(sq(1, 3), sf.c2 / std::sqrt(r1 * r2), 1e-15);

  const CovarianceMatrix rot = apply_symplectic(
      v, LocalSymplectic::rotation(std::numbers::pi, 0.0));
  EXPECT_LT(max_abs_diff(rot.matrix(),
                         StandardForm{sf.a, sf.b, -sf.c1, -sf.c2}
                             .to_covariance()
                             .matrix()),
            1e-15);
}

TEST(LocalSymplectic, RejectsNonUnitDeterminant) {
  EXPECT_THROW(LocalSymplectic(Mat2::diagonal({2.0, 1.0}), Mat2::identity()),
               ContractError);
}

TEST(SqueezeParams, RejectsNonPositive) {
  EXPECT_THROW(SqueezeParams(0.0, 1.0), ContractError);
  EXPECT_THROW(SqueezeParams(1.0, -2.0), ContractError);
}

TEST(ToStandardForm, FixedPoint) {
  const StandardForm sf{1.0, 1.0, 0.5, -0.3};
  const auto red = to_standard_form(sf.to_covariance());
  expect_form_near(red.form, sf, 1e-12);
  EXPECT_LT(max_abs_diff(red.transform.full(), Mat4::identity()), 1e-12);
}

TEST(ToStandardForm, RecoversParametersAfterLocalSymplectic) {
  const StandardForm sf{1.5, 0.8, 0.4, -0.2};
  RandomStream rng(17);
  for (int k = 0; k < 100; ++k) {
    const LocalSymplectic s = random_local_symplectic(rng);
    const CovarianceMatrix v = apply_symplectic(sf.to_covariance(), s);
    const auto red = to_standard_form(v);
    expect_form_near(red.form, sf, 1e-10);
    EXPECT_LT(max_abs_diff(apply_symplectic(v, red.transform).matrix(),
                           red.form.to_covariance().matrix()),
              1e-10);
  }
}

TEST(ToStandardForm, TwoModeSqueezedVacuum) {
  const auto red = to_standard_form(two_mode_squeezed(0.5));
  EXPECT_NEAR(red.form.a, std::cosh(1.0) / 2, 1e-12);
  EXPECT_NEAR(red.form.b, std::cosh(1.0) / 2, 1e-12);
  EXPECT_NEAR(red.form.c1, std::sinh(1.0) / 2, 1e-12);
  EXPECT_NEAR(red.form.c2, -std::sinh(1.0) / 2, 1e-12);
  EXPECT_NEAR(red.form.a, 0.77154, 1e-5);
  EXPECT_NEAR(red.form.c1, 0.58760, 1e-5);
}

TEST(ToStandardForm, PreservesLocalInvariants) {
  RandomStream rng(23);
  for (int k = 0; k < 500; ++k) {
    const CovarianceMatrix v = random_physical_covariance(rng);
    const auto red = to_standard_form(v);
    const StandardForm& f = red.form;
    EXPECT_GE(f.c1, std::abs(f.c2) - 1e-12);
    EXPECT_NEAR(f.a * f.a, det2(v.a_block()), 1e-9 * (1 + f.a * f.a));
    EXPECT_NEAR(f.b * f.b, det2(v.b_block()), 1e-9 * (1 + f.b * f.b));
    const double scale = std::pow(v.c_block().max_abs(), 2);
    EXPECT_NEAR(f.c1 * f.c2, det2(v.c_block()), 1e-9 * (1 + scale));
    EXPECT_NEAR(det4(f.to_covariance().matrix()), det4(v.matrix()),
                1e-9 * (1 + std::pow(v.matrix().max_abs(), 4)));
  }
}

TEST(ToStandardForm, RejectsUnphysical) {
  EXPECT_THROW(to_standard_form(CovarianceMatrix(0.25 * Mat4::identity())),
               UnphysicalStateError);
}

TEST(StandardForm, RatioIsAbsentWithoutCorrelation) {
  EXPECT_FALSE((StandardForm{1, 1, 0, 0}.t().has_value()));
  const StandardForm sf{1, 1, 0.4, -0.2};
  EXPECT_DOUBLE_EQ(*sf.t(), 0.5);
}

TEST(PCondition, Examples) {
  const PsdMargin vac = p_condition(CovarianceMatrix(0.5 * Mat4::identity()));
  EXPECT_TRUE(vac.is_psd);
  EXPECT_NEAR(vac.min_eigenvalue, 0.0, 1e-15);
  const PsdMargin id = p_condition(CovarianceMatrix(Mat4::identity()));
  EXPECT_TRUE(id.is_psd);
  EXPECT_NEAR(id.min_eigenvalue, 0.5, 1e-15);
  EXPECT_FALSE(p_condition(two_mode_squeezed(0.5)).is_psd);
}

TEST(PCondition, ImpliesPhysical) {
  RandomStream rng(29);
  for (int k = 0; k < 2000; ++k) {
    const CovarianceMatrix v = random_physical_covariance(rng);
    const CovarianceMatrix shifted(v.matrix() + 0.3 * Mat4::identity());
    if (p_condition(shifted).is_psd) {
      EXPECT_TRUE(is_physical(shifted).is_psd);
    }
    if (p_condition(v).is_psd) EXPECT_TRUE(is_physical(v).is_psd);
  }
}

TEST(BuildPFunction, Examples) {
  const GaussianPFunction id = build_p_function(CovarianceMatrix(Mat4::identity()));
  EXPECT_LT(max_abs_diff(id.precision, 2.0 * Mat4::identity()), 1e-15);
  EXPECT_NEAR(id.norm_factor, 1.0 / (std::numbers::pi * std::numbers::pi),
              1e-15);
  const GaussianPFunction d =
      build_p_function(CovarianceMatrix(1.5 * Mat4::identity()));
  EXPECT_LT(max_abs_diff(d.precision, Mat4::identity()), 1e-15);
  EXPECT_NEAR(d.norm_factor, 1.0 / (4 * std::numbers::pi * std::numbers::pi),
              1e-15);
  EXPECT_THROW(build_p_function(CovarianceMatrix(0.5 * Mat4::identity())),
               RepresentationError);
}

TEST(BuildPFunction, DensityPeakMatchesNormalization) {
  const GaussianPFunction pf =
      build_p_function(CovarianceMatrix(Mat4::identity()));
  EXPECT_DOUBLE_EQ(pf.density({0, 0, 0, 0}), pf.norm_factor);
  EXPECT_NEAR(pf.density({1, 0, 0, 0}), pf.norm_factor * std::exp(-1.0),
              1e-15);
}

TEST(PFunctionMoments, RecoversCovariance) {
  for (const Mat4& m : {Mat4::identity(), Mat4::diagonal({2, 1, 2, 1})}) {
    const CovarianceMatrix v(m);
    const MomentEstimate est =
        sample_p_function(build_p_function(v), 1000000, 42);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        EXPECT_LE(std::abs(est.covariance(r, c) - v(r, c)),
                  5 * est.standard_error(r, c))
            << r << "," << c;
      }
  }
}

TEST(PFunctionMoments, DeterministicForSeed) {
  const GaussianPFunction pf =
      build_p_function(CovarianceMatrix(Mat4::diagonal({2, 1, 2, 1})));
  EXPECT_EQ(p_function_moments(pf, 10000, 99), p_function_moments(pf, 10000, 99));
  EXPECT_NE(p_function_moments(pf, 10000, 99), p_function_moments(pf, 10000, 98));
}

TEST(PFunctionMoments, RejectsTooFewSamples) {
  const GaussianPFunction pf =
      build_p_function(CovarianceMatrix(Mat4::identity()));
  EXPECT_THROW(p_function_moments(pf, 10, 1), ContractError);
}

}  // namespace
}  // namespace gauss_sep
