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

// gauss-sep: separability checks for two-mode Gaussian states.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gauss_sep/criteria.h"
#include "gauss_sep/oracle.h"
#include "gauss_sep/report_io.h"
#include "gauss_sep/verify.h"
#include "json.hpp"

namespace {

using gauss_sep::InputError;
using gauss_sep::kExitInputError;
using nlohmann::json;

struct Options {
  std::string input;
  std::optional<double> a, b, t, c1, c2;
  double tol = gauss_sep::kDefaultPsdTol;
  std::uint64_t seed = 20260101;
  std::string format;
  std::string grid = gauss_sep::kDefaultGrid;
  double fault_d = 0.0;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

gauss_sep::StateInput state_from_options(const Options& opt) {
  if (!opt.input.empty()) {
    return gauss_sep::parse_state_text(read_input(opt.input));
  }
  if (!opt.a || !opt.b || !opt.c1 || !opt.c2) {
    throw InputError("give --input or all of --a, --b, --c1, --c2");
  }
  return gauss_sep::StandardForm{*opt.a, *opt.b, *opt.c1, *opt.c2};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_check(const Options& opt) {
  const auto v = gauss_sep::to_covariance(state_from_options(opt));
  const auto rep = gauss_sep::separability_verdict(v, opt.tol);
  if (opt.format == "text") {
    std::cout << gauss_sep::report_text(rep);
  } else {
    print_json(gauss_sep::to_json(rep));
  }
  return gauss_sep::exit_code(rep.verdict);
}

int cmd_reduce(const Options& opt) {
  const auto v = gauss_sep::to_covariance(state_from_options(opt));
  if (!gauss_sep::is_physical(v, opt.tol).is_psd) {
    std::cerr << "error: state is unphysical\n";
    return gauss_sep::exit_code(gauss_sep::Verdict::kUnphysical);
  }
  const auto red = gauss_sep::to_standard_form(v, opt.tol);
  if (opt.format == "text") {
    std::cout << "a=" << gauss_sep::format_double(red.form.a)
              << " b=" << gauss_sep::format_double(red.form.b)
              << " c1=" << gauss_sep::format_double(red.form.c1)
              << " c2=" << gauss_sep::format_double(red.form.c2) << "\n";
  } else {
    print_json({{"standard_form", gauss_sep::to_json(red.form)},
                {"transform", gauss_sep::to_json(red.transform)}});
  }
  return 0;
}

int cmd_bound(const Options& opt) {
  if (!opt.a || !opt.b || !opt.t) {
    throw InputError("bound needs --a, --b and --t");
  }
  const double a = *opt.a, b = *opt.b, t = *opt.t;
  const auto bound = gauss_sep::explicit_bound(a, b, t);
  const auto sq = gauss_sep::optimal_squeezing(a, b, t);
  const double dgcz = gauss_sep::dgcz_standard_bound(a, b, t);
  const double simon = gauss_sep::simon_det_criterion(
      gauss_sep::StandardForm{a, b, bound.c1_max, -t * bound.c1_max});
  if (opt.format == "text") {
    std::cout << "c1_max=" << gauss_sep::format_double(bound.c1_max)
              << " r1=" << gauss_sep::format_double(sq.r1)
              << " r2=" << gauss_sep::format_double(sq.r2)
              << " dgcz16_bound=" << gauss_sep::format_double(dgcz)
              << " simon_margin_at_boundary="
              << gauss_sep::format_double(simon) << "\n";
  } else {
    print_json({{"a", a},
                {"b", b},
                {"t", t},
                {"c1_max", bound.c1_max},
                {"r1", sq.r1},
                {"r2", sq.r2},
                {"dgcz16_bound", dgcz},
                {"simon_margin_at_boundary", simon}});
  }
  return 0;
}

int cmd_scan(const Options& opt) {
  if (opt.format != "csv") throw InputError("scan only writes csv");
  std::cout << gauss_sep::scan_csv(gauss_sep::parse_grid(opt.grid));
  return 0;
}

int cmd_random(const Options& opt) {
  gauss_sep::OracleConfig cfg;
  cfg.seed = opt.seed;
  const auto v = gauss_sep::random_physical_covariance(cfg);
  if (opt.format == "text") {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        std::cout << (c ? " " : "") << gauss_sep::format_double(v(r, c));
      }
      std::cout << "\n";
    }
  } else {
    print_json(gauss_sep::to_json(v));
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  gauss_sep::VerifyConfig cfg;
  cfg.seed = opt.seed;
  cfg.d_fault = opt.fault_d;
  cfg.tol_psd = opt.tol;
  const auto results = gauss_sep::run_verification(cfg);
  bool all = true;
  json checks = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back(gauss_sep::to_json(r));
  }
  if (opt.format == "text") {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name
                << ": " << r.detail << "\n";
    }
  } else {
    print_json({{"seed", cfg.seed},
                {"d_fault", cfg.d_fault},
                {"tol_psd", cfg.tol_psd},
                {"checks", checks},
                {"passed", all}});
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability checks for two-mode Gaussian states"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub, const std::string& def) {
    sub->add_option("--format", opt.format, "Output format (default " + def +
                                                ")")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input,
                    "JSON file with a covariance or standard form ('-' = stdin)");
    sub->add_option("--a", opt.a);
    sub->add_option("--b", opt.b);
    sub->add_option("--c1", opt.c1);
    sub->add_option("--c2", opt.c2);
    sub->add_option("--tol", opt.tol, "PSD tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Classify a state");
  add_state(check);
  add_format(check, "json");

  auto* reduce = app.add_subcommand("reduce", "Reduce to standard form");
  add_state(reduce);
  add_format(reduce, "json");

  auto* bound = app.add_subcommand("bound", "Separability bound on c1");
  bound->add_option("--a", opt.a)->required();
  bound->add_option("--b", opt.b)->required();
  bound->add_option("--t", opt.t)->required();
  add_format(bound, "json");

  auto* scan = app.add_subcommand("scan", "Tabulate the bound over a grid");
  scan->add_option("--grid", opt.grid, "a=lo:hi:n,b=lo:hi:n,t=lo:hi:n");
  add_format(scan, "csv");

  auto* random = app.add_subcommand("random", "Random physical covariance");
  random->add_option("--seed", opt.seed);
  add_format(random, "json");

  auto* verify = app.add_subcommand("verify", "Run the self-verification");
  verify->add_option("--seed", opt.seed);
  verify->add_option("--tol", opt.tol)->check(CLI::PositiveNumber);
  verify->add_option("--fault-d", opt.fault_d,
                     "Perturb D by this amount (regression hook)");
  add_format(verify, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  if (opt.format.empty()) opt.format = *scan ? "csv" : "json";

  try {
    if (*check) return cmd_check(opt);
    if (*reduce) return cmd_reduce(opt);
    if (*bound) return cmd_bound(opt);
    if (*scan) return cmd_scan(opt);
    if (*random) return cmd_random(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const gauss_sep::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const gauss_sep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return kExitInputError;
}
