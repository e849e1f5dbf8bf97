// Copyright 2026 The v2vsig Authors
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

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success, 2 bad input, 3 internal inconsistency, 4 oracle
// disagreement.

#pragma once

#include <cstddef>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "v2vsig/csv.hpp"
#include "v2vsig/equilibrium.hpp"
#include "v2vsig/optimize.hpp"
#include "v2vsig/oracle.hpp"
#include "v2vsig/scenario.hpp"

namespace v2vsig::cli {

enum ExitCode : int { kOk = 0, kBadInput = 2, kInternal = 3, kOracleDisagrees = 4 };

struct Options {
  std::string scenario_path;
  std::string out_path;
  std::string meta_path;
  std::size_t grid = kDefaultGrid;
  bool grid_given = false;
  double eps = 1e-3;
  double grid_step = 0.01;
  double mass_tol = 0.03;
  double p_tol = 0.02;
};

namespace detail {

// Writes to --out when given, else to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ScenarioError("cannot open output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

inline int cmd_solve(const Options& o, std::ostream& out) {
  const Scenario sc = load_scenario(o.scenario_path);
  std::vector<SweepRecord> rows;
  for (double b : sc.betas()) rows.push_back(make_record(sc.game_at(b)));
  Sink sink(o.out_path, out);
  csv::write_equilibria(sink.stream(), rows);
  if (!o.meta_path.empty()) {
    std::ofstream meta(o.meta_path);
    if (!meta) throw ScenarioError("cannot open metadata file '" + o.meta_path + "'");
    meta << format_scenario(sc);
  }
  return kOk;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  const Scenario sc = load_scenario(o.scenario_path);
  BetaSweep range{0.0, 1.0, o.grid};
  if (const auto* s = std::get_if<BetaSweep>(&sc.beta)) {
    range = *s;
    if (o.grid_given) range.count = o.grid;
  }
  const auto rows = sweep_beta(sc.game_at(range.min), range.count, range.min, range.max);
  Sink sink(o.out_path, out);
  csv::write_equilibria(sink.stream(), rows);
  return kOk;
}

inline int cmd_optimize(const Options& o, std::ostream& out, Objective objective) {
  const Scenario sc = load_scenario(o.scenario_path);
  const SignalingGame family = sc.game_at(0.0);
  std::size_t grid = o.grid;
  if (const auto* s = std::get_if<BetaSweep>(&sc.beta); s && !o.grid_given) grid = s->count;
  const DesignResult d = objective == Objective::AccidentProbability
                             ? optimal_beta_accidents(family)
                             : optimal_beta_social(family, grid);
  Sink sink(o.out_path, out);
  csv::write_design(sink.stream(), d);
  return kOk;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  const Scenario sc = load_scenario(o.scenario_path);
  Sink sink(o.out_path, out);
  csv::write_oracle_header(sink.stream());
  bool all_agree = true;
  for (double b : sc.betas()) {
    const SignalingGame g = sc.game_at(b);
    const EquilibriumReport eq = solve_equilibrium(g);
    const auto set = oracle::epsilon_equilibria(g, o.grid_step, o.eps);
    csv::OracleRow row;
    row.beta = b;
    row.region = eq.region;
    row.agreement = oracle::compare_with_closed_form(g, set);
    row.closed_form_ok = oracle::check_equilibrium_conditions(g, eq.x_ne, 1e-9).holds;
    row.agree = row.closed_form_ok && row.agreement.within(o.mass_tol, o.p_tol);
    all_agree = all_agree && row.agree;
    csv::write_oracle_row(sink.stream(), row);
  }
  return all_agree ? kOk : kOracleDisagrees;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Signaling equilibria of V2V hazard warnings"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("scenario", o.scenario_path, "Scenario file (YAML)")->required();
    sub->add_option("--out", o.out_path, "Write CSV here instead of stdout");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "Number of beta grid points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  };

  auto* solve = app.add_subcommand("solve", "Equilibrium at each beta in the scenario");
  add_common(solve);
  solve->add_option("--meta", o.meta_path, "Also write the canonical scenario text here");

  auto* sweep = app.add_subcommand("sweep", "Equilibria over a beta grid");
  add_common(sweep);
  add_grid(sweep);

  auto* opt_p = app.add_subcommand("optimize-p", "Beta minimising accident probability");
  add_common(opt_p);

  auto* opt_s = app.add_subcommand("optimize-s", "Beta minimising social cost");
  add_common(opt_s);
  add_grid(opt_s);

  auto* check = app.add_subcommand("oracle-check", "Compare closed forms with a brute-force search");
  add_common(check);
  check->add_option("--eps", o.eps, "Cost slack of the eps-equilibrium")
      ->check(CLI::PositiveNumber);
  check->add_option("--grid-step", o.grid_step, "Mass resolution of the search grid")
      ->check(CLI::PositiveNumber);
  check->add_option("--mass-tol", o.mass_tol, "Allowed aggregate reckless-mass gap");
  check->add_option("--p-tol", o.p_tol, "Allowed accident-probability gap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  for (auto* sub : {sweep, opt_s})
    if (auto* opt = sub->get_option_no_throw("--grid"); opt && opt->count() > 0) o.grid_given = true;

  try {
    if (*solve) return detail::cmd_solve(o, out);
    if (*sweep) return detail::cmd_sweep(o, out);
    if (*opt_p) return detail::cmd_optimize(o, out, Objective::AccidentProbability);
    if (*opt_s) return detail::cmd_optimize(o, out, Objective::SocialCost);
    if (*check) return detail::cmd_oracle(o, out);
  } catch (const LogicError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const DegenerateSignalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace v2vsig::cli
