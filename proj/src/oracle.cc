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

#include "gauss_sep/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace gauss_sep {
namespace {

constexpr double kInvGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

struct LinePoint {
  double x = 0.0;
  double value = -1.0;
};

void keep_best(LinePoint& best, double x, double value) {
  if (value > best.value || (value == best.value && x < best.x)) {
    best = LinePoint{x, value};
  }
}

// Golden-section maximization of a unimodal f on [lo, hi]; returns the best
// probe evaluated, ties toward smaller x.
template <typename F>
LinePoint golden_max(const F& f, double lo, double hi, int iters) {
  double x1 = hi - kInvGolden * (hi - lo);
  double x2 = lo + kInvGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  LinePoint best;
  keep_best(best, x1, f1);
  keep_best(best, x2, f2);
  for (int i = 0; i < iters; ++i) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvGolden * (hi - lo);
      f1 = f(x1);
      keep_best(best, x1, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvGolden * (hi - lo);
      f2 = f(x2);
      keep_best(best, x2, f2);
    }
  }
  return best;
}

// Grid scan, then golden refinement inside the two cells around the best
// grid point.
template <typename F>
LinePoint grid_then_golden(const F& f, const std::vector<double>& grid,
                           int iters) {
  LinePoint best;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double value = f(grid[i]);
    if (value > best.value) {
      best = LinePoint{grid[i], value};
      best_index = i;
    }
  }
  const double lo = grid[best_index == 0 ? 0 : best_index - 1];
  const double hi = grid[std::min(best_index + 1, grid.size() - 1)];
  if (hi > lo) {
    const LinePoint refined = golden_max(f, lo, hi, iters);
    keep_best(best, refined.x, refined.value);
  }
  return best;
}

Mat2 rot(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Mat2({{{c, -s}, {s, c}}});
}

Mat2 random_mode_map(RandomStream& rng) {
  const double squeeze = rng.uniform(-0.75, 0.75);
  const Mat2 z = Mat2::diagonal({std::exp(squeeze), std::exp(-squeeze)});
  return rot(rng.uniform(0.0, 2.0 * std::numbers::pi)) * z *
         rot(rng.uniform(0.0, 2.0 * std::numbers::pi));
}

using Vec8 = std::array<double, 8>;

Probe probe_from(const Vec8& z) {
  return Probe{{z[0], z[1]}, {z[2], z[3]}, {z[4], z[5]}, {z[6], z[7]}};
}

double norm8(const Vec8& z) {
  double s = 0.0;
  for (double x : z) s += x * x;
  return std::sqrt(s);
}

double dot8(const Vec8& x, const Vec8& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

void OracleConfig::validate() const {
  if (grid_points < 10 || refine_iters < 10) {
    throw ContractError("OracleConfig: need grid_points >= 10 and "
                        "refine_iters >= 10");
  }
  if (!(tol > 0.0)) throw ContractError("OracleConfig: tol must be positive");
}

BruteForceResult brute_force_c1max(double a, double b, double t,
                                   const OracleConfig& cfg) {
  cfg.validate();
  if (a < 0.5 || b < 0.5 || t < 0.0 || t > 1.0) {
    throw ContractError("brute_force_c1max: need a, b >= 1/2, t in [0, 1]");
  }
  const double lo = std::log(0.1);
  const double hi = std::log(4.0 * std::max(2.0 * a, 2.0 * b));
  std::vector<double> grid(static_cast<std::size_t>(cfg.grid_points));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) /
                       static_cast<double>(grid.size() - 1);
  }

  auto objective = [&](double x1, double x2) {
    return p_rep_bound_expressions(a, b, t, std::exp(x1), std::exp(x2))
        .admissible();
  };
  // Inner problem: best r2 for a fixed r1. Each slice is unimodal (zero,
  // rising, falling, zero), so grid + golden finds its maximum.
  auto inner = [&](double x1) {
    return grid_then_golden([&](double x2) { return objective(x1, x2); }, grid,
                            cfg.refine_iters);
  };
  const LinePoint outer = grid_then_golden(
      [&](double x1) { return inner(x1).value; }, grid, cfg.refine_iters);
  const LinePoint best_r2 = inner(outer.x);

  BruteForceResult out;
  out.c1_max = std::max(0.0, best_r2.value);
  out.r1 = std::exp(outer.x);
  out.r2 = std::exp(best_r2.x);
  constexpr double kSlack = 1e-6;
  out.in_claimed_range = out.r1 >= 1.0 - kSlack &&
                         out.r1 <= 2.0 * a * (1.0 + kSlack) &&
                         out.r2 >= 1.0 - kSlack &&
                         out.r2 <= 2.0 * b * (1.0 + kSlack);
  return out;
}

CovarianceMatrix covariance_from_williamson(double nu1, double nu2,
                                            const Mat4& symplectic) {
  if (!(nu1 >= 0.5 && nu2 >= 0.5)) {
    throw ContractError("symplectic eigenvalues must be >= 1/2");
  }
  const Mat4 w = Mat4::diagonal({nu1, nu1, nu2, nu2});
  const Mat4 v = symplectic * w * symplectic.transpose();
  return CovarianceMatrix(0.5 * (v + v.transpose()));
}

LocalSymplectic random_local_symplectic(RandomStream& rng) {
  const Mat2 s1 = random_mode_map(rng);
  const Mat2 s2 = random_mode_map(rng);
  return LocalSymplectic(s1, s2);
}

Mat4 random_symplectic(RandomStream& rng) {
  const Mat4 first = random_local_symplectic(rng).full();
  const double theta = rng.uniform(0.0, 0.5 * std::numbers::pi);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat4 beam_splitter;
  for (std::size_t i = 0; i < 2; ++i) {
    beam_splitter(i, i) = c;
    beam_splitter(i + 2, i + 2) = c;
    beam_splitter(i, i + 2) = s;
    beam_splitter(i + 2, i) = -s;
  }
  const double r = rng.uniform(0.0, 1.0);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  Mat4 two_mode_squeezer;
  for (std::size_t i = 0; i < 2; ++i) {
    const double sign = i == 0 ? 1.0 : -1.0;
    two_mode_squeezer(i, i) = ch;
    two_mode_squeezer(i + 2, i + 2) = ch;
    two_mode_squeezer(i, i + 2) = sign * sh;
    two_mode_squeezer(i + 2, i) = sign * sh;
  }
  const Mat4 last = random_local_symplectic(rng).full();
  return last * two_mode_squeezer * beam_splitter * first;
}

CovarianceMatrix random_physical_covariance(RandomStream& rng) {
  const double nu1 = 0.5 * std::pow(8.0, rng.uniform());
  const double nu2 = 0.5 * std::pow(8.0, rng.uniform());
  return covariance_from_williamson(nu1, nu2, random_symplectic(rng));
}

CovarianceMatrix random_physical_covariance(const OracleConfig& cfg) {
  RandomStream rng(cfg.seed);
  return random_physical_covariance(rng);
}

StandardForm random_physical_standard_form(RandomStream& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    StandardForm sf;
    sf.a = rng.uniform(0.5, 3.0);
    sf.b = rng.uniform(0.5, 3.0);
    sf.c1 = rng.uniform(0.0, std::sqrt(sf.a * sf.b));
    sf.c2 = rng.uniform(-sf.c1, sf.c1);
    if (is_physical(sf.to_covariance()).is_psd) return sf;
  }
  throw NotFoundError("random_physical_standard_form: rejection sampling "
                      "exhausted");
}

ProbeResult probe_minimize_quadratic(const CovarianceMatrix& v,
                                     PeresSign sign, const OracleConfig& cfg) {
  cfg.validate();
  auto energy = [&](const Vec8& z) {
    return peres_expectation(v, probe_from(z), sign);
  };
  // The expectation is a real quadratic form z^T Q z; recover Q by
  // polarization.
  Mat8 q;
  for (std::size_t i = 0; i < 8; ++i) {
    Vec8 ei{};
    ei[i] = 1.0;
    q(i, i) = energy(ei);
  }
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      Vec8 eij{};
      eij[i] = 1.0;
      eij[j] = 1.0;
      q(i, j) = q(j, i) = 0.5 * (energy(eij) - q(i, i) - q(j, j));
    }
  }
  const double scale = std::max(1.0, q.max_abs());

  RandomStream rng(cfg.seed);
  constexpr int kStarts = 8;
  constexpr int kMaxSteps = 2000;
  ProbeResult best;
  best.min_margin = std::numeric_limits<double>::infinity();
  for (int start = 0; start < kStarts; ++start) {
    Vec8 z{};
    for (double& x : z) x = rng.normal();
    const double n0 = norm8(z);
    for (double& x : z) x /= n0;

    double rho = dot8(z, q * z);
    for (int step = 0; step < kMaxSteps; ++step) {
      const Vec8 qz = q * z;
      rho = dot8(z, qz);
      Vec8 p{};
      for (std::size_t i = 0; i < 8; ++i) p[i] = qz[i] - rho * z[i];
      const double pn = norm8(p);
      if (pn <= 1e-13 * scale) break;
      for (double& x : p) x /= pn;
      // Exact line search: smallest Ritz pair in span{z, p}.
      const Vec8 qp = q * p;
      const double alpha = rho;
      const double beta = dot8(z, qp);
      const double gamma = dot8(p, qp);
      const double mid = 0.5 * (alpha + gamma);
      const double lambda =
          mid - std::hypot(0.5 * (alpha - gamma), beta);
      double c0 = beta;
      double c1 = lambda - alpha;
      if (std::hypot(c0, c1) < std::hypot(lambda - gamma, beta)) {
        c0 = lambda - gamma;
        c1 = beta;
      }
      const double cn = std::hypot(c0, c1);
      if (cn == 0.0) break;
      for (std::size_t i = 0; i < 8; ++i) z[i] = (c0 * z[i] + c1 * p[i]) / cn;
      const double zn = norm8(z);
      for (double& x : z) x /= zn;
      const double next = dot8(z, q * z);
      const bool stalled = rho - next <= 1e-15 * scale;
      rho = std::min(rho, next);
      if (stalled) break;
    }
    rho = energy(z);
    if (rho < best.min_margin) {
      best.min_margin = rho;
      best.witness = probe_from(z);
    }
  }
  best.quadratic_margin = quadratic_form_margin(v, best.witness);
  return best;
}

bool certify(const Counterexample& ce, double tol) {
  return ce.det_value >= 0.0 &&
         ce.min_eigenvalue < -std::max(1e-6, tol * std::max(1.0, ce.scale));
}

Counterexample det_vs_eig_counterexample(const OracleConfig& cfg) {
  cfg.validate();
  auto evaluate = [](double a, double c) {
    const CovarianceMatrix v = StandardForm{a, a, c, c}.to_covariance();
    const PsdMargin m = ppt_full(v);
    return Counterexample{v, ppt_det(v, PeresSign::kMinus), m.min_eigenvalue,
                          m.scale, c};
  };
  for (const double a : {1.0, 1.5, 2.0, 3.0}) {
    const double c_max = 4.0 * a;
    double prev_c = 0.0;
    for (int k = 1; k <= cfg.grid_points; ++k) {
      const double c = c_max * k / cfg.grid_points;
      const Counterexample here = evaluate(a, c);
      if (here.det_value >= 0.0 && here.min_eigenvalue < 0.0) {
        // Bracket the onset of the negative eigenvalue.
        double lo = prev_c;
        double hi = c;
        for (int it = 0; it < cfg.refine_iters; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (evaluate(a, mid).min_eigenvalue < 0.0) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        // Walk out from the onset until the candidate certifies.
        const double step = c_max / cfg.grid_points;
        for (int j = 0; hi + j * step <= c_max; ++j) {
          const Counterexample cand = evaluate(a, hi + j * step);
          if (certify(cand, cfg.tol)) return cand;
        }
      }
      prev_c = c;
    }
  }
  throw NotFoundError("det_vs_eig_counterexample: no certified instance on "
                      "the scanned rays");
}

MonteCarloReport mc_p_roundtrip(const CovarianceMatrix& v, std::size_t n,
                                std::uint64_t seed) {
  const GaussianPFunction pf = build_p_function(v);
  const MomentEstimate est = sample_p_function(pf, n, seed);
  MonteCarloReport rep;
  rep.passed = true;
  double max_se = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double dev = std::abs(est.covariance(i, j) - v(i, j));
      const double se = est.standard_error(i, j);
      max_se = std::max(max_se, se);
      rep.max_abs_deviation = std::max(rep.max_abs_deviation, dev);
      if (se > 0.0) rep.worst_sigma = std::max(rep.worst_sigma, dev / se);
      if (dev > 5.0 * se) rep.passed = false;
    }
  }
  rep.threshold = 5.0 * max_se;
  return rep;
}

}  // namespace gauss_sep
