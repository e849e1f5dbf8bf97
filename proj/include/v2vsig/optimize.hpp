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

// Choosing the signal quality beta.
//
// P(G) is single-peaked in beta (weakly increasing, then weakly decreasing),
// so its minimum over [0, 1] is always attained at an endpoint. S(G) is
// non-increasing in beta outside the NCVR range, where beta = 1 is optimal;
// inside NCVR it can rise, so it is searched numerically.

#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <string_view>
#include <thread>
#include <vector>

#include "v2vsig/equilibrium.hpp"
#include "v2vsig/root_finding.hpp"

namespace v2vsig {

inline constexpr std::size_t kDefaultGrid = 101;
inline constexpr double kBetaTolerance = 1e-6;

struct SweepRecord {
  double beta = 0.0;
  Region region = Region::NCVC;
  double P = 0.0;
  double S = 0.0;
  double x_n = 0.0;
  double x_vu = 0.0;
  double Q = 0.0;
  double posterior = 0.0;
};

enum class Objective { AccidentProbability, SocialCost };

inline constexpr std::string_view to_string(Objective o) {
  return o == Objective::AccidentProbability ? "accident_probability" : "social_cost";
}

struct DesignResult {
  Objective objective = Objective::AccidentProbability;
  double beta_star = 0.0;
  double value_at_star = 0.0;
  double value_at_0 = 0.0;  // objective at beta = 0
  double value_at_1 = 0.0;  // objective at beta = 1
  bool fast_path = false;   // answered without a numeric search
};

inline SweepRecord make_record(const SignalingGame& g) {
  const EquilibriumReport e = solve_equilibrium(g);
  return {g.beta, e.region, e.P, e.social_cost, e.x_ne.x_n, e.x_ne.x_vu, e.Q, e.posterior};
}

/// grid_n equally spaced beta samples on [lo, hi], each solved; ordered by
/// beta. Samples are independent and are evaluated concurrently for large
/// grids.
inline std::vector<SweepRecord> sweep_beta(const SignalingGame& family, std::size_t grid_n,
                                           double lo = 0.0, double hi = 1.0) {
  if (grid_n < 2) throw InputError("a beta sweep needs at least 2 grid points");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
    throw InputError("beta sweep range must satisfy 0 <= min <= max <= 1");
  validate_game(family.with_beta(lo));

  std::vector<SweepRecord> out(grid_n);
  auto beta_at = [&](std::size_t i) {
    if (i + 1 == grid_n) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_n - 1);
  };
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = make_record(family.with_beta(beta_at(i)));
  };

  const std::size_t workers =
      grid_n < 512 ? 1 : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (workers == 1) {
    fill(0, grid_n);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (grid_n + workers - 1) / workers;
  for (std::size_t b = 0; b < grid_n; b += chunk)
    jobs.push_back(std::async(std::launch::async, fill, b, std::min(grid_n, b + chunk)));
  for (auto& j : jobs) j.get();
  return out;
}

/// Minimises P(G) over beta by comparing the two endpoints. Ties go to
/// beta = 0.
inline DesignResult optimal_beta_accidents(const SignalingGame& family) {
  validate_game(family);
  DesignResult res;
  res.objective = Objective::AccidentProbability;
  res.value_at_0 = accident_probability(family.with_beta(0.0));
  res.value_at_1 = accident_probability(family.with_beta(1.0));
  res.beta_star = res.value_at_1 < res.value_at_0 ? 1.0 : 0.0;
  res.value_at_star = std::min(res.value_at_0, res.value_at_1);
  res.fast_path = true;
  return res;
}

/// Minimises S(G) over beta. If no grid sample falls in NCVR the answer is
/// beta = 1. Otherwise the best grid sample (ties to the smaller beta) is
/// refined by golden-section search over its neighbouring cells; the grid
/// value is kept when refinement does not improve on it.
inline DesignResult optimal_beta_social(const SignalingGame& family,
                                        std::size_t grid_n = kDefaultGrid) {
  const auto records = sweep_beta(family, grid_n);
  DesignResult res;
  res.objective = Objective::SocialCost;
  res.value_at_0 = records.front().S;
  res.value_at_1 = records.back().S;

  const bool any_ncvr = std::any_of(records.begin(), records.end(),
                                    [](const SweepRecord& r) { return r.region == Region::NCVR; });
  if (!any_ncvr) {
    res.beta_star = 1.0;
    res.value_at_star = res.value_at_1;
    res.fast_path = true;
    return res;
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < records.size(); ++i)
    if (records[i].S < records[best].S) best = i;
  res.beta_star = records[best].beta;
  res.value_at_star = records[best].S;

  const double lo = records[best == 0 ? 0 : best - 1].beta;
  const double hi = records[std::min(best + 1, records.size() - 1)].beta;
  const auto refined = root::golden_section_minimize(
      [&](double b) { return social_cost(family.with_beta(b)); }, lo, hi, kBetaTolerance);
  if (refined.value < res.value_at_star) {
    res.beta_star = refined.x;
    res.value_at_star = refined.value;
  }
  return res;
}

}  // namespace v2vsig
