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

#include "gauss_sep/report_io.h"

#include <charconv>
#include <cmath>
#include <sstream>

namespace gauss_sep {
namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) {
    throw InputError(where + " must be a number");
  }
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError(where + " must be finite");
  return x;
}

json mat2_json(const Mat2& m) {
  return json::array({json::array({m(0, 0), m(0, 1)}),
                      json::array({m(1, 0), m(1, 1)})});
}

json optional_json(const auto& opt) {
  if (!opt) return nullptr;
  return to_json(*opt);
}

Axis parse_axis(const std::string& name, const std::string& text) {
  Axis axis;
  std::istringstream is(text);
  std::string lo, hi, count;
  if (!std::getline(is, lo, ':') || !std::getline(is, hi, ':') ||
      !std::getline(is, count) || lo.empty() || hi.empty() || count.empty()) {
    throw InputError("grid axis '" + name + "' must be lo:hi:count, got '" +
                     text + "'");
  }
  try {
    std::size_t used = 0;
    axis.lo = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    axis.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    axis.count = std::stoi(count, &used);
    if (used != count.size()) throw std::invalid_argument(count);
  } catch (const std::logic_error&) {
    throw InputError("grid axis '" + name + "' has a malformed number in '" +
                     text + "'");
  }
  if (axis.count < 1 || axis.hi < axis.lo ||
      (axis.count == 1 && axis.hi != axis.lo) ||
      (axis.count > 1 && axis.hi == axis.lo)) {
    throw InputError("grid axis '" + name + "' is an empty range: '" + text +
                     "'");
  }
  return axis;
}

}  // namespace

StateInput parse_state(const json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (j.contains("v")) {
    if (j.contains("ordering")) {
      if (!j["ordering"].is_string() ||
          j["ordering"].get<std::string>() != kOrdering) {
        throw InputError(std::string("\"ordering\" must be \"") + kOrdering +
                         "\"");
      }
    }
    const json& rows = j["v"];
    if (!rows.is_array() || rows.size() != 4) {
      throw InputError("\"v\" must be an array of 4 rows");
    }
    Mat4::Rows entries{};
    for (std::size_t r = 0; r < 4; ++r) {
      if (!rows[r].is_array() || rows[r].size() != 4) {
        throw InputError("v[" + std::to_string(r) +
                         "] must be an array of 4 numbers");
      }
      for (std::size_t c = 0; c < 4; ++c) {
        entries[r][c] = number_at(rows[r][c], "v[" + std::to_string(r) + "][" +
                                                  std::to_string(c) + "]");
      }
    }
    const Mat4 m(entries);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = r + 1; c < 4; ++c) {
        if (std::abs(m(r, c) - m(c, r)) > kSymmetryTol * (1.0 + m.max_abs())) {
          std::ostringstream os;
          os << "covariance matrix is not symmetric: v[" << r << "][" << c
             << "] = " << m(r, c) << " but v[" << c << "][" << r
             << "] = " << m(c, r);
          throw InputError(os.str());
        }
      }
    }
    return CovarianceMatrix(m);
  }
  if (j.contains("a")) {
    StandardForm sf;
    for (const char* key : {"a", "b", "c1", "c2"}) {
      if (!j.contains(key)) {
        throw InputError(std::string("standard form is missing \"") + key +
                         "\"");
      }
    }
    sf.a = number_at(j["a"], "a");
    sf.b = number_at(j["b"], "b");
    sf.c1 = number_at(j["c1"], "c1");
    sf.c2 = number_at(j["c2"], "c2");
    return sf;
  }
  throw InputError(
      "input must contain \"v\" (covariance) or \"a\", \"b\", \"c1\", \"c2\" "
      "(standard form)");
}

StateInput parse_state_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_state(j);
}

CovarianceMatrix to_covariance(const StateInput& in) {
  if (const auto* v = std::get_if<CovarianceMatrix>(&in)) return *v;
  return std::get<StandardForm>(in).to_covariance();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kSeparable:
      return 0;
    case Verdict::kEntangled:
      return 1;
    case Verdict::kUnphysical:
      return 2;
    case Verdict::kBoundary:
      return 3;
  }
  return kExitInputError;
}

json to_json(const CovarianceMatrix& v) {
  json rows = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    rows.push_back(json::array({v(r, 0), v(r, 1), v(r, 2), v(r, 3)}));
  }
  return json{{"ordering", kOrdering}, {"v", rows}};
}

json to_json(const StandardForm& sf) {
  return json{{"a", sf.a}, {"b", sf.b}, {"c1", sf.c1}, {"c2", sf.c2}};
}

json to_json(const PsdMargin& m) {
  return json{{"min_eigenvalue", m.min_eigenvalue},
              {"scale", m.scale},
              {"is_psd", m.is_psd}};
}

json to_json(const LocalSymplectic& s) {
  return json{{"s1", mat2_json(s.s1())}, {"s2", mat2_json(s.s2())}};
}

json to_json(const OptimalSqueeze& o) {
  return json{{"r1", o.r1},
              {"r2", o.r2},
              {"residual_22", o.residual_22},
              {"residual_23", o.residual_23}};
}

json to_json(const SeparabilityReport& rep) {
  json j;
  j["verdict"] = std::string(verdict_name(rep.verdict));
  j["exit_code"] = exit_code(rep.verdict);
  j["tol"] = rep.tol;
  j["defaults"] = {{"tol_psd", kDefaultPsdTol},
                   {"tol_strict_p_representation", kStrictRepresentabilityTol},
                   {"explicit_bound_band", 1e-8}};
  j["physical"] = to_json(rep.physical);
  j["ppt_full"] = to_json(rep.ppt_full);
  j["criteria_agree"] = rep.criteria_agree;
  if (rep.verdict == Verdict::kUnphysical) {
    for (const char* key :
         {"standard_form", "t", "simon_det_margin", "explicit_bound",
          "explicit_bound_margin", "dgcz16_margin", "dgcz26_margin",
          "optimal_squeeze", "p_rep_after_optimal_squeeze"}) {
      j[key] = nullptr;
    }
    return j;
  }
  j["standard_form"] = optional_json(rep.standard_form);
  j["t"] = rep.t ? json(*rep.t) : json(nullptr);
  j["simon_det_margin"] = rep.simon_det_margin;
  j["explicit_bound"] = {{"c1_max", rep.explicit_bound.c1_max},
                         {"sqrt_d", rep.explicit_bound.sqrt_d},
                         {"numerator", rep.explicit_bound.numerator}};
  j["explicit_bound_margin"] = rep.explicit_bound_margin;
  j["dgcz16_margin"] = rep.dgcz16_margin;
  j["dgcz26_margin"] = {{"value", rep.dgcz26_margin.value},
                        {"valid", rep.dgcz26_margin.valid}};
  j["optimal_squeeze"] = optional_json(rep.optimal_squeeze);
  j["p_rep_after_optimal_squeeze"] = to_json(rep.p_rep_after_optimal_squeeze);
  return j;
}

json to_json(const CheckResult& c) {
  return json{{"id", c.id},         {"name", c.name},
              {"passed", c.passed}, {"worst", c.worst},
              {"threshold", c.threshold}, {"detail", c.detail}};
}

std::string report_text(const SeparabilityReport& rep) {
  std::ostringstream os;
  os.precision(10);
  os << "verdict: " << verdict_name(rep.verdict) << "\n";
  os << "physical min eigenvalue: " << rep.physical.min_eigenvalue << "\n";
  os << "ppt min eigenvalue: " << rep.ppt_full.min_eigenvalue << "\n";
  if (rep.standard_form) {
    const StandardForm& sf = *rep.standard_form;
    os << "standard form: a=" << sf.a << " b=" << sf.b << " c1=" << sf.c1
       << " c2=" << sf.c2 << "\n";
    os << "explicit bound: c1_max=" << rep.explicit_bound.c1_max
       << " margin=" << rep.explicit_bound_margin << "\n";
    os << "simon det margin: " << rep.simon_det_margin << "\n";
    os << "dgcz16 margin: " << rep.dgcz16_margin << "\n";
    os << "dgcz26 margin: " << rep.dgcz26_margin.value
       << (rep.dgcz26_margin.valid ? "" : " (clamped)") << "\n";
    if (rep.optimal_squeeze) {
      os << "optimal squeeze: r1=" << rep.optimal_squeeze->r1
         << " r2=" << rep.optimal_squeeze->r2 << "\n";
    }
    os << "p-representation after squeeze min eigenvalue: "
       << rep.p_rep_after_optimal_squeeze.min_eigenvalue << "\n";
  }
  os << "criteria agree: " << (rep.criteria_agree ? "yes" : "no") << "\n";
  return os.str();
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<double> Axis::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  for (int k = 0; k < count; ++k) {
    out.push_back(k == count - 1 ? hi : lo + (hi - lo) * k / (count - 1));
  }
  return out;
}

Grid parse_grid(const std::string& text) {
  Grid grid;
  bool seen_a = false, seen_b = false, seen_t = false;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("grid item '" + item + "' must be name=lo:hi:count");
    }
    const std::string name = item.substr(0, eq);
    const Axis axis = parse_axis(name, item.substr(eq + 1));
    if (name == "a") {
      grid.a = axis;
      seen_a = true;
    } else if (name == "b") {
      grid.b = axis;
      seen_b = true;
    } else if (name == "t") {
      grid.t = axis;
      seen_t = true;
    } else {
      throw InputError("unknown grid axis '" + name + "'");
    }
  }
  if (!seen_a || !seen_b || !seen_t) {
    throw InputError("grid must define axes a, b and t");
  }
  if (grid.a.lo < 0.5 || grid.b.lo < 0.5) {
    throw InputError("grid axes a and b must satisfy a, b >= 0.5");
  }
  if (grid.t.lo < 0.0 || grid.t.hi > 1.0) {
    throw InputError("grid axis t must lie in [0, 1]");
  }
  return grid;
}

std::string scan_csv(const Grid& grid) {
  std::string out = std::string(kScanHeader) + "\n";
  for (double a : grid.a.values()) {
    for (double b : grid.b.values()) {
      for (double t : grid.t.values()) {
        const double c1_max = explicit_bound(a, b, t).c1_max;
        const OptimalSqueeze opt = optimal_squeezing(a, b, t);
        const double dgcz = dgcz_standard_bound(a, b, t);
        for (double x : {a, b, t, c1_max, opt.r1, opt.r2, dgcz}) {
          out += format_double(x);
          out += ',';
        }
        out += format_double(dgcz - c1_max);
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace gauss_sep
