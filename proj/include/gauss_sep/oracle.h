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

// Brute-force and randomized verifiers. Nothing here evaluates the D
// polynomial or the closed-form squeezing; they are the reference the
// closed forms are checked against.

#ifndef GAUSS_SEP_ORACLE_H_
#define GAUSS_SEP_ORACLE_H_

#include <cstddef>
#include <cstdint>

#include "gauss_sep/criteria.h"
#include "gauss_sep/gaussian_state.h"
#include "gauss_sep/random.h"

namespace gauss_sep {

struct OracleConfig {
  int grid_points = 200;   // per axis
  int refine_iters = 60;   // golden-section steps
  std::uint64_t seed = 0;
  double tol = 1e-7;

  /// Throws ContractError unless grid_points >= 10 and refine_iters >= 10.
  void validate() const;
};

struct BruteForceResult {
  double c1_max = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  /// Argmax lies in [1, 2a] x [1, 2b] (relative slack 1e-6). Only
  /// meaningful when c1_max > 0.
  bool in_claimed_range = true;
};

/// Maximizes min(expr_q, expr_p) over (r1, r2) by a log-spaced grid on
/// [0.1, 4 max(2a, 2b)]^2 followed by nested golden-section refinement.
BruteForceResult brute_force_c1max(double a, double b, double t,
                                   const OracleConfig& cfg);

/// S diag(nu1, nu1, nu2, nu2) S^T. Requires nu1, nu2 >= 1/2.
CovarianceMatrix covariance_from_williamson(double nu1, double nu2,
                                            const Mat4& symplectic);

/// Random two-mode symplectic: local rotations and squeezers around a
/// beam splitter and a two-mode squeezer.
Mat4 random_symplectic(RandomStream& rng);
LocalSymplectic random_local_symplectic(RandomStream& rng);

/// Williamson construction with symplectic eigenvalues log-uniform in
/// [1/2, 4]; physical by construction, deterministic in cfg.seed.
CovarianceMatrix random_physical_covariance(const OracleConfig& cfg);
CovarianceMatrix random_physical_covariance(RandomStream& rng);

/// a, b uniform in [1/2, 3], c1 uniform in [0, sqrt(ab)), c2 uniform in
/// (-c1, c1); rejected until physical.
StandardForm random_physical_standard_form(RandomStream& rng);

struct ProbeResult {
  /// Smallest value of peres_expectation found over unit-norm probes.
  double min_margin = 0.0;
  Probe witness;
  /// quadratic_form_margin at the witness; <= min_margin.
  double quadratic_margin = 0.0;
};

/// Multi-start local descent (steepest descent with exact line search on
/// the unit sphere) of peres_expectation over probes (d, f, g, h).
ProbeResult probe_minimize_quadratic(const CovarianceMatrix& v,
                                     PeresSign sign, const OracleConfig& cfg);

struct Counterexample {
  CovarianceMatrix v;
  double det_value = 0.0;       // ppt_det(v, kMinus)
  double min_eigenvalue = 0.0;  // ppt_full(v).min_eigenvalue
  double scale = 0.0;
  double c = 0.0;  // the correlation on the ray (a, a, c, c)
};

/// Scans rays (a, a, c, c) for a matrix whose partially transposed
/// determinant is nonnegative while its smallest eigenvalue is negative.
/// Throws NotFoundError if no certified instance exists on the rays.
Counterexample det_vs_eig_counterexample(const OracleConfig& cfg);

/// True if det >= 0 and min eigenvalue < -max(1e-6, tol * scale).
bool certify(const Counterexample& ce, double tol);

struct MonteCarloReport {
  double max_abs_deviation = 0.0;
  double threshold = 0.0;      // 5 * largest per-entry standard error
  double worst_sigma = 0.0;    // max |deviation| / standard error
  bool passed = false;         // every entry within its own 5 sigma
};

MonteCarloReport mc_p_roundtrip(const CovarianceMatrix& v, std::size_t n,
                                std::uint64_t seed);

}  // namespace gauss_sep

#endif  // GAUSS_SEP_ORACLE_H_
