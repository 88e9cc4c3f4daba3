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

// Acceptance checks: every closed form against its oracle, on fixed grids
// and seeded random ensembles. Shared by the `verify` CLI command and the
// acceptance test binary.

#ifndef GAUSS_SEP_VERIFY_H_
#define GAUSS_SEP_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gauss_sep/oracle.h"

namespace gauss_sep {

struct VerifyConfig {
  std::uint64_t seed = 20260101;
  /// Test hook: added to the D polynomial wherever the closed forms use it.
  double d_fault = 0.0;
  int random_states = 10000;
  int mc_states = 20;
  std::size_t mc_samples = 1000000;
  double tol_psd = kDefaultPsdTol;
  OracleConfig oracle;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst observed deviation (or violation count)
  double threshold = 0.0;  // the pinned tolerance it is compared with
  std::string detail;
};

/// a, b in {0.5, 0.75, 1, 1.5, 2, 3}.
const std::vector<double>& grid_ab_values();
/// t in {0, 0.1, ..., 1}.
const std::vector<double>& grid_t_values();

/// Perturbation used by the regression guard.
inline constexpr double kFaultPerturbation = 0.01;

CheckResult check_bound_vs_oracle(const VerifyConfig& cfg);
CheckResult check_triple_equality(const VerifyConfig& cfg);
CheckResult check_boundary_residuals(const VerifyConfig& cfg);
CheckResult check_criterion_equivalence(const VerifyConfig& cfg);
CheckResult check_prep_implies_separable(const VerifyConfig& cfg);
CheckResult check_det_insufficiency(const VerifyConfig& cfg);
CheckResult check_hierarchy(const VerifyConfig& cfg);
CheckResult check_standard_form_roundtrip(const VerifyConfig& cfg);
CheckResult check_monte_carlo(const VerifyConfig& cfg);
/// Re-runs checks 1-3 with D perturbed by kFaultPerturbation; passes only
/// if all three fail.
CheckResult check_fault_guard(const VerifyConfig& cfg);

std::vector<CheckResult> run_verification(const VerifyConfig& cfg);

}  // namespace gauss_sep

#endif  // GAUSS_SEP_VERIFY_H_
