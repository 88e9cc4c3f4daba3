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

// JSON and CSV encodings shared by the CLI and its tests.
//
// Covariance input:    {"ordering": "q1 p1 q2 p2", "v": [[...], x4]}
// Standard-form input: {"a": ..., "b": ..., "c1": ..., "c2": ...}
//
// Doubles are written in shortest round-trip form, so parsing a report back
// reproduces every number bit for bit.

#ifndef GAUSS_SEP_REPORT_IO_H_
#define GAUSS_SEP_REPORT_IO_H_

#include <string>
#include <variant>
#include <vector>

#include "gauss_sep/criteria.h"
#include "gauss_sep/gaussian_state.h"
#include "gauss_sep/verify.h"
#include "json.hpp"

namespace gauss_sep {

inline constexpr const char* kOrdering = "q1 p1 q2 p2";

/// Malformed user input; the message names the offending field or entry.
class InputError : public ContractError {
 public:
  using ContractError::ContractError;
};

using StateInput = std::variant<CovarianceMatrix, StandardForm>;

/// Accepts either schema. Throws InputError.
StateInput parse_state(const nlohmann::json& j);
StateInput parse_state_text(const std::string& text);
CovarianceMatrix to_covariance(const StateInput& in);

/// Exit status of `check`: 0 Separable, 1 Entangled, 2 Unphysical,
/// 3 Boundary.
int exit_code(Verdict v);
inline constexpr int kExitInputError = 64;

nlohmann::json to_json(const CovarianceMatrix& v);
nlohmann::json to_json(const StandardForm& sf);
nlohmann::json to_json(const PsdMargin& m);
nlohmann::json to_json(const LocalSymplectic& s);
nlohmann::json to_json(const SeparabilityReport& rep);
nlohmann::json to_json(const CheckResult& c);

std::string report_text(const SeparabilityReport& rep);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  std::vector<double> values() const;
};

struct Grid {
  Axis a;
  Axis b;
  Axis t;
};

inline constexpr const char* kDefaultGrid = "a=0.5:3:6,b=0.5:3:6,t=0:1:11";

/// Parses "a=lo:hi:n,b=lo:hi:n,t=lo:hi:n". Throws InputError on empty or
/// out-of-domain ranges.
Grid parse_grid(const std::string& text);

inline constexpr const char* kScanHeader =
    "a,b,t,c1_max,r1,r2,dgcz16_bound,hierarchy_gap";

/// CSV rows (header first), lexicographic in (a, b, t), LF terminated.
std::string scan_csv(const Grid& grid);

}  // namespace gauss_sep

#endif  // GAUSS_SEP_REPORT_IO_H_
