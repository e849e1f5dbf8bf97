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

// The accident probability implied by a behavior profile and the beliefs and
// costs that follow from it.
//
// Non-V2V drivers behave habitually. Unsignaled V2V drivers are reckless with
// mass x_vu on days without a warning, which happen with probability 1 - Q
// where Q = P * beta * q(y). The accident probability therefore solves
//
//   P = p(x_n + (1 - P * beta * q(y)) * x_vu).
//
// The left side increases in P and the right side decreases, so the root is
// unique and lies in [p(0), p(1)].

#pragma once

#include <utility>

#include "v2vsig/hazard_model.hpp"
#include "v2vsig/root_finding.hpp"

namespace v2vsig {

inline constexpr double kConsistencyTolerance = 1e-12;
inline constexpr int kConsistencyMaxIter = 200;

struct ConsistencyResult {
  double P = 0.0;                    // accident probability
  double Q = 0.0;                    // P(a given V2V driver sees a warning)
  double posterior_no_signal = 0.0;  // P(accident | no warning shown)
  double residual = 0.0;             // |F(P)| at termination
};

/// Probability of an accident given that no warning was displayed.
inline double posterior_no_signal(const SignalingGame& g, double P) {
  if (!detail::in_unit(P))
    throw InputError("accident probability must lie in [0, 1] (got " + detail::fmt_num(P) + ")");
  const double s = g.signal_strength();
  if (P * s >= 1.0)
    throw DegenerateSignalError(
        "posterior after no signal is undefined: every V2V driver is warned (P * beta * q(y) = 1)");
  return P * (1.0 - s) / (1.0 - P * s);
}

namespace detail {

inline double reckless_mass(const BehaviorProfile& x, double P, double s) {
  return clamp_unit(x.x_n + (1.0 - P * s) * x.x_vu);
}

}  // namespace detail

/// Solves the consistency equation by bisection of
/// F(P) = P - p(x_n + (1 - P beta q(y)) x_vu) on the given bracket.
/// x_vs does not enter: signaled drivers only act on days already known to
/// have an accident.
inline ConsistencyResult solve_profile_P(const SignalingGame& g, const BehaviorProfile& x,
                                         std::pair<double, double> bracket) {
  const double s = g.signal_strength();
  auto F = [&](double P) {
    return P - detail::eval_p_unchecked(g.p, detail::reckless_mass(x, P, s));
  };
  const auto root = root::bisect_increasing(F, bracket.first, bracket.second,
                                            kConsistencyTolerance, kConsistencyMaxIter);
  ConsistencyResult out;
  out.P = root.x;
  out.Q = out.P * s;
  out.posterior_no_signal = posterior_no_signal(g, out.P);
  out.residual = root.residual;
  return out;
}

inline ConsistencyResult solve_profile_P(const SignalingGame& g, const BehaviorProfile& x) {
  return solve_profile_P(
      g, x, {detail::eval_p_unchecked(g.p, 0.0), detail::eval_p_unchecked(g.p, 1.0)});
}

/// Expected cost of each action for each driver group.
struct CostTable {
  double n_careful = 0.0;
  double n_reckless = 0.0;
  double vu_careful = 0.0;
  double vu_reckless = 0.0;
  double vs_careful = 0.0;
  double vs_reckless = 0.0;
};

// Careful drivers regret their caution (cost 1) when no accident occurs;
// reckless drivers pay r when one does. A displayed warning implies an
// accident with certainty.
inline CostTable group_costs(const SignalingGame& g, double P, double posterior) {
  return {1.0 - P, g.r * P, 1.0 - posterior, g.r * posterior, 0.0, g.r};
}

inline CostTable group_costs(const SignalingGame& g, const ConsistencyResult& c) {
  return group_costs(g, c.P, c.posterior_no_signal);
}

/// Population-expected cost of profile x; signaled drivers are careful and
/// pay nothing, so they do not appear.
inline double profile_social_cost(const SignalingGame& g, const BehaviorProfile& x,
                                  const ConsistencyResult& c) {
  const CostTable J = group_costs(g, c);
  return J.n_careful * (1.0 - g.y - x.x_n) + J.n_reckless * x.x_n +
         (1.0 - c.Q) * (J.vu_careful * (g.y - x.x_vu) + J.vu_reckless * x.x_vu);
}

/// x_n + (1 - Q) x_vu: the mass that is reckless on an average day. Equal
/// across all equilibria of a game.
inline double aggregate_reckless_mass(const BehaviorProfile& x, const ConsistencyResult& c) {
  return x.x_n + (1.0 - c.Q) * x.x_vu;
}

}  // namespace v2vsig
