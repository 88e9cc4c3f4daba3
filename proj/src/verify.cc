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

#include "gauss_sep/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gauss_sep/criteria.h"
#include "gauss_sep/gaussian_state.h"

namespace gauss_sep {
namespace {

double faulty_d(const VerifyConfig& cfg, double a, double b, double t) {
  return d_polynomial(a, b, t) + cfg.d_fault;
}

std::string format_detail(std::initializer_list<std::pair<const char*, double>>
                              fields) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) os << ", ";
    os << key << "=" << value;
    first = false;
  }
  return os.str();
}

double rel_diff(double x, double y, double floor) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), floor});
}

}  // namespace

const std::vector<double>& grid_ab_values() {
  static const std::vector<double> values{0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
  return values;
}

const std::vector<double>& grid_t_values() {
  static const std::vector<double> values = [] {
    std::vector<double> t;
    for (int k = 0; k <= 10; ++k) t.push_back(k / 10.0);
    return t;
  }();
  return values;
}

CheckResult check_bound_vs_oracle(const VerifyConfig& cfg) {
  CheckResult r{1, "bound_vs_oracle", false, 0.0, 1e-5, ""};
  int points = 0;
  int outside_claimed_range = 0;
  for (double a : grid_ab_values()) {
    for (double b : grid_ab_values()) {
      for (double t : grid_t_values()) {
        const double closed =
            explicit_bound_with_d(a, b, t, faulty_d(cfg, a, b, t)).c1_max;
        const BruteForceResult bf = brute_force_c1max(a, b, t, cfg.oracle);
        r.worst = std::max(r.worst, std::abs(closed - bf.c1_max));
        if (bf.c1_max > cfg.oracle.tol && !bf.in_claimed_range) {
          ++outside_claimed_range;
        }
        ++points;
      }
    }
  }
  r.passed = r.worst <= r.threshold;
  r.detail = format_detail({{"points", points},
                            {"argmax_outside_claimed_range",
                             outside_claimed_range}});
  return r;
}

CheckResult check_triple_equality(const VerifyConfig& cfg) {
  CheckResult r{2, "triple_equality", false, 0.0, 1e-9, ""};
  int points = 0;
  for (double a : grid_ab_values()) {
    for (double b : grid_ab_values()) {
      for (double t : grid_t_values()) {
        if (t == 0.0) continue;
        const double d = faulty_d(cfg, a, b, t);
        const OptimalSqueeze opt = optimal_squeezing_with_d(a, b, t, d);
        const PRepExpressions e =
            p_rep_bound_expressions(a, b, t, opt.r1, opt.r2);
        const double bound = explicit_bound_with_d(a, b, t, d).c1_max;
        r.worst = std::max({r.worst, std::abs(e.expr_q - e.expr_p),
                            std::abs(e.expr_q - bound)});
        ++points;
      }
    }
  }
  r.passed = r.worst <= r.threshold;
  r.detail = format_detail({{"points", points}});
  return r;
}

CheckResult check_boundary_residuals(const VerifyConfig& cfg) {
  CheckResult r{3, "boundary_residuals", false, 0.0, 1e-10, ""};
  int points = 0;
  int outside_claimed_range = 0;
  for (double a : grid_ab_values()) {
    for (double b : grid_ab_values()) {
      for (double t : grid_t_values()) {
        if (t == 0.0) continue;
        const OptimalSqueeze opt =
            optimal_squeezing_with_d(a, b, t, faulty_d(cfg, a, b, t));
        const BoundaryResiduals res =
            boundary_residuals(a, b, t, opt.r1, opt.r2);
        r.worst = std::max(
            {r.worst, std::abs(res.res22) / std::max(res.scale22, 1e-300),
             std::abs(res.res23) / std::max(res.scale23, 1e-300)});
        if (opt.r1 < 1.0 - 1e-12 || opt.r1 > 2.0 * a + 1e-12 ||
            opt.r2 < 1.0 - 1e-12 || opt.r2 > 2.0 * b + 1e-12) {
          ++outside_claimed_range;
        }
        ++points;
      }
    }
  }
  r.passed = r.worst <= r.threshold;
  r.detail = format_detail(
      {{"points", points}, {"r_outside_claimed_range", outside_claimed_range}});
  return r;
}

CheckResult check_criterion_equivalence(const VerifyConfig& cfg) {
  CheckResult r{4, "criterion_equivalence", false, 0.0, 0.0, ""};
  RandomStream rng(cfg.seed + 4);
  int disagreements = 0;
  int in_band = 0;
  int entangled = 0;
  for (int i = 0; i < cfg.random_states; ++i) {
    const StandardForm sf = random_physical_standard_form(rng);
    const double t = sf.c1 > 0.0 ? std::abs(sf.c2) / sf.c1 : 0.0;
    const double bound =
        explicit_bound_with_d(sf.a, sf.b, t, faulty_d(cfg, sf.a, sf.b, t))
            .c1_max;
    const double margin = bound - sf.c1;
    if (std::abs(margin) <= 1e-8 * std::max({1.0, sf.a, sf.b})) {
      ++in_band;
      continue;
    }
    const bool ppt = ppt_full(sf.to_covariance(), cfg.tol_psd).is_psd;
    if (!ppt) ++entangled;
    if ((margin >= 0.0) != ppt) ++disagreements;
  }
  r.worst = disagreements;
  r.passed = disagreements == 0;
  r.detail = format_detail({{"states", cfg.random_states},
                            {"entangled", entangled},
                            {"boundary_band", in_band}});
  return r;
}

CheckResult check_prep_implies_separable(const VerifyConfig& cfg) {
  CheckResult r{5, "p_rep_implies_separable", false, 0.0, 0.0, ""};
  RandomStream rng(cfg.seed + 5);
  int violations = 0;
  int representable = 0;
  for (int i = 0; i < cfg.random_states; ++i) {
    const CovarianceMatrix v = random_physical_covariance(rng);
    const StandardForm sf = to_standard_form(v, cfg.tol_psd).form;
    const double t = sf.t().value_or(0.0);
    const double a = std::max(sf.a, 0.5);
    const double b = std::max(sf.b, 0.5);
    const OptimalSqueeze opt =
        optimal_squeezing_with_d(a, b, t, faulty_d(cfg, a, b, t));
    const bool prep =
        p_condition(squeezed_standard_form(sf, opt.r1, opt.r2), cfg.tol_psd)
            .is_psd;
    if (!prep) continue;
    ++representable;
    if (!ppt_full(v, cfg.tol_psd).is_psd) ++violations;
  }
  r.worst = violations;
  r.passed = violations == 0;
  r.detail = format_detail(
      {{"states", cfg.random_states}, {"p_representable", representable}});
  return r;
}

CheckResult check_det_insufficiency(const VerifyConfig& cfg) {
  CheckResult r{6, "determinant_insufficiency", false, 0.0, -1e-6, ""};
  try {
    const Counterexample ce = det_vs_eig_counterexample(cfg.oracle);
    // Re-evaluate from scratch with the tightened tolerance.
    Counterexample again = ce;
    again.det_value = ppt_det(ce.v, PeresSign::kMinus);
    const PsdMargin m = ppt_full(ce.v, 1e-12);
    again.min_eigenvalue = m.min_eigenvalue;
    again.scale = m.scale;
    const Verdict verdict = separability_verdict(ce.v, cfg.tol_psd).verdict;
    r.worst = again.min_eigenvalue;
    r.passed = certify(again, 1e-12) && again.min_eigenvalue <= r.threshold &&
               verdict != Verdict::kSeparable;
    r.detail = format_detail({{"c", ce.c},
                              {"det", again.det_value},
                              {"min_eigenvalue", again.min_eigenvalue}});
  } catch (const NotFoundError& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

CheckResult check_hierarchy(const VerifyConfig& cfg) {
  CheckResult r{7, "hierarchy", false, 0.0, 1.0, ""};
  double min_gap = std::numeric_limits<double>::infinity();
  double worst_t1 = 0.0;
  double worst_dgcz26 = 0.0;
  for (double a : grid_ab_values()) {
    for (double b : grid_ab_values()) {
      for (double t : grid_t_values()) {
        const double d = faulty_d(cfg, a, b, t);
        const double bound = explicit_bound_with_d(a, b, t, d).c1_max;
        const double gap = dgcz_standard_bound(a, b, t) - bound;
        min_gap = std::min(min_gap, gap);
        if (t == 1.0) worst_t1 = std::max(worst_t1, std::abs(gap));
        if (t > 0.0) {
          const OptimalSqueeze opt = optimal_squeezing_with_d(a, b, t, d);
          const StandardForm edge{a, b, bound, -t * bound};
          worst_dgcz26 = std::max(
              worst_dgcz26,
              std::abs(dgcz_squeezed_margin(edge, opt.r1, opt.r2).value));
        }
      }
    }
  }
  // Worst ratio of each deviation to its own tolerance.
  r.worst = std::max({-min_gap / 1e-10, worst_t1 / 1e-10, worst_dgcz26 / 1e-9});
  r.passed = r.worst <= r.threshold;
  r.detail = format_detail({{"min_gap", min_gap},
                            {"max_abs_gap_at_t1", worst_t1},
                            {"max_abs_dgcz26_at_boundary", worst_dgcz26}});
  return r;
}

CheckResult check_standard_form_roundtrip(const VerifyConfig& cfg) {
  CheckResult r{8, "standard_form_roundtrip", false, 0.0, 1e-9, ""};
  RandomStream rng(cfg.seed + 8);
  double worst_entry = 0.0;
  double worst_invariant = 0.0;
  for (int i = 0; i < cfg.random_states; ++i) {
    const CovarianceMatrix v = random_physical_covariance(rng);
    const StandardFormReduction red = to_standard_form(v, cfg.tol_psd);
    const CovarianceMatrix back =
        apply_symplectic(red.form.to_covariance(), red.transform.inverse());
    worst_entry =
        std::max(worst_entry, max_abs_diff(back.matrix(), v.matrix()));

    const CovarianceMatrix sf = red.form.to_covariance();
    // det C can vanish; compare against the natural scale of each block.
    const double sa = v.a_block().max_abs();
    const double sb = v.b_block().max_abs();
    const double sc = v.c_block().max_abs();
    worst_invariant = std::max(
        {worst_invariant,
         rel_diff(det2(v.a_block()), det2(sf.a_block()), sa * sa),
         rel_diff(det2(v.b_block()), det2(sf.b_block()), sb * sb),
         rel_diff(det2(v.c_block()), det2(sf.c_block()), sc * sc),
         rel_diff(det4(v.matrix()), det4(sf.matrix()),
                  std::numeric_limits<double>::min())});
  }
  r.worst = std::max(worst_entry, worst_invariant);
  r.passed = worst_entry <= 1e-9 && worst_invariant <= 1e-9;
  r.detail = format_detail({{"states", cfg.random_states},
                            {"max_entry_error", worst_entry},
                            {"max_invariant_rel_error", worst_invariant}});
  return r;
}

CheckResult check_monte_carlo(const VerifyConfig& cfg) {
  CheckResult r{9, "monte_carlo_p_function", false, 0.0, 5.0, ""};
  RandomStream rng(cfg.seed + 9);
  int failures = 0;
  double worst_dev = 0.0;
  for (int k = 0; k < cfg.mc_states; ++k) {
    CovarianceMatrix v(Mat4::identity());
    if (k > 0) {
      // Optimally squeezed separable state pulled inside the boundary,
      // then rotated locally (rotations commute with V - I/2).
      StandardForm sf = random_physical_standard_form(rng);
      const double t = sf.c1 > 0.0 ? std::abs(sf.c2) / sf.c1 : 0.0;
      sf.c1 = std::min(sf.c1, explicit_bound(sf.a, sf.b, t).c1_max);
      sf.c2 = std::copysign(t * sf.c1, sf.c2);
      const OptimalSqueeze opt = optimal_squeezing(sf.a, sf.b, t);
      const Mat4 inner = squeezed_standard_form(sf, opt.r1, opt.r2).matrix() +
                         0.05 * Mat4::identity();
      const LocalSymplectic rot = LocalSymplectic::rotation(
          rng.uniform(0.0, 2.0 * std::numbers::pi),
          rng.uniform(0.0, 2.0 * std::numbers::pi));
      v = apply_symplectic(CovarianceMatrix(inner), rot);
    }
    const MonteCarloReport rep =
        mc_p_roundtrip(v, cfg.mc_samples, cfg.seed + 1000 + k);
    r.worst = std::max(r.worst, rep.worst_sigma);
    worst_dev = std::max(worst_dev, rep.max_abs_deviation);
    if (!rep.passed) ++failures;
  }
  r.passed = failures == 0;
  r.detail = format_detail({{"states", cfg.mc_states},
                            {"samples", static_cast<double>(cfg.mc_samples)},
                            {"failures", failures},
                            {"max_abs_deviation", worst_dev}});
  return r;
}

CheckResult check_fault_guard(const VerifyConfig& cfg) {
  CheckResult r{10, "fault_injection_guard", false, 0.0, 0.0, ""};
  VerifyConfig faulty = cfg;
  faulty.d_fault = kFaultPerturbation;
  const CheckResult c1 = check_bound_vs_oracle(faulty);
  const CheckResult c2 = check_triple_equality(faulty);
  const CheckResult c3 = check_boundary_residuals(faulty);
  const int still_passing = c1.passed + c2.passed + c3.passed;
  r.worst = still_passing;
  r.passed = still_passing == 0;
  r.detail = format_detail({{"perturbation", kFaultPerturbation},
                            {"bound_vs_oracle_worst", c1.worst},
                            {"triple_equality_worst", c2.worst},
                            {"boundary_residuals_worst", c3.worst}});
  return r;
}

std::vector<CheckResult> run_verification(const VerifyConfig& cfg) {
  return {check_bound_vs_oracle(cfg),         check_triple_equality(cfg),
          check_boundary_residuals(cfg),      check_criterion_equivalence(cfg),
          check_prep_implies_separable(cfg),  check_det_insufficiency(cfg),
          check_hierarchy(cfg),               check_standard_form_roundtrip(cfg),
          check_monte_carlo(cfg),             check_fault_guard(cfg)};
}

}  // namespace gauss_sep
