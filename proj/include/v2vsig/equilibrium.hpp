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

// Closed-form signaling equilibria.
//
// Parameter space splits into five ranges, named by what non-V2V drivers (N)
// and unsignaled V2V drivers (V) do at equilibrium: Careful, Indifferent or
// Reckless. With s = beta q(y), A = 1/(1+r) and C = 1/(1+r(1-s)):
//
//   NCVC  p(0) > C                                   x = (0, 0, 0)        P = p(0)
//   NCVI  p(0) <= C <= p((1 - sC) y)                 x = (0, chi_vu, 0)   P = C
//   NIVR  p((1 - sA) y) <= A <= p(1 - sAy)           x = (chi_n, y, 0)    P = A
//   NRVR  p(1 - sAy) < A                             x = (1 - y, y, 0)    P = fixed point
//   NCVR  none of the above                          x = (0, y, 0)        P = fixed point
//
// A non-V2V driver prefers caution iff P > A; an unsignaled V2V driver iff
// P > C (equivalently, posterior > A).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "v2vsig/consistency.hpp"
#include "v2vsig/hazard_model.hpp"

namespace v2vsig {

enum class Region { NCVC, NCVI, NCVR, NIVR, NRVR };

inline constexpr std::array<Region, 5> kAllRegions = {Region::NCVC, Region::NCVI, Region::NCVR,
                                                      Region::NIVR, Region::NRVR};

inline constexpr std::string_view to_string(Region r) {
  switch (r) {
    case Region::NCVC: return "NCVC";
    case Region::NCVI: return "NCVI";
    case Region::NCVR: return "NCVR";
    case Region::NIVR: return "NIVR";
    case Region::NRVR: return "NRVR";
  }
  return "?";
}

// Masses that overshoot their bounds by at most this are clamped.
inline constexpr double kMassTolerance = 1e-9;

struct EquilibriumReport {
  Region region = Region::NCVC;
  BehaviorProfile x_ne;
  double P = 0.0;
  double Q = 0.0;
  double posterior = 0.0;
  double social_cost = 0.0;
};

/// Indifference thresholds of the two driver types.
struct Thresholds {
  double signal = 0.0;      // s = beta q(y)
  double non_v2v = 0.0;     // A = 1/(1+r)
  double unsignaled = 0.0;  // C = 1/(1+r(1-s))
};

inline Thresholds thresholds(const SignalingGame& g) {
  const double s = g.signal_strength();
  return {s, 1.0 / (1.0 + g.r), 1.0 / (1.0 + g.r * (1.0 - s))};
}

/// Whether g satisfies the inequality system that defines `region`. NCVR is
/// tested directly by its two inequalities, not as a complement.
inline bool satisfies_region(const SignalingGame& g, Region region) {
  const auto [s, A, C] = thresholds(g);
  auto p = [&](double d) { return detail::eval_p_unchecked(g.p, detail::clamp_unit(d)); };
  switch (region) {
    case Region::NCVC:
      return p(0.0) > C;
    case Region::NCVI:
      return p(0.0) <= C && C <= p((1.0 - s * C) * g.y);
    case Region::NIVR:
      return p((1.0 - s * A) * g.y) <= A && A <= p(1.0 - s * A * g.y);
    case Region::NRVR:
      return p(1.0 - s * A * g.y) < A;
    case Region::NCVR:
      return p((1.0 - s * C) * g.y) < C && A < p((1.0 - s * A) * g.y);
  }
  return false;
}

/// First satisfied range in the order NCVC, NCVI, NIVR, NRVR; NCVR otherwise.
inline Region classify_region(const SignalingGame& g) {
  for (Region r : {Region::NCVC, Region::NCVI, Region::NIVR, Region::NRVR}) {
    if (satisfies_region(g, r)) return r;
  }
  return Region::NCVR;
}

namespace detail {

inline double checked_mass(double v, double hi, const char* what, Region region) {
  if (v < -kMassTolerance || v > hi + kMassTolerance) {
    throw LogicError(std::string("closed form for region ") + std::string(to_string(region)) +
                     " puts " + what + " = " + fmt_num(v) + " outside [0, " + fmt_num(hi) +
                     "]; game is misclassified");
  }
  return std::clamp(v, 0.0, hi);
}

}  // namespace detail

/// The closed-form equilibrium that `region` prescribes, without checking
/// that g actually lies in that range. Masses outside their bounds by more
/// than 1e-9 raise LogicError.
inline EquilibriumReport closed_form(const SignalingGame& g, Region region) {
  const auto [s, A, C] = thresholds(g);
  EquilibriumReport rep;
  rep.region = region;
  auto& x = rep.x_ne;
  bool fixed_point = false;
  switch (region) {
    case Region::NCVC:
      x = {0.0, 0.0, 0.0};
      rep.P = detail::eval_p_unchecked(g.p, 0.0);
      break;
    case Region::NCVI:
      x = {0.0, detail::checked_mass(inv_p(g.p, C) / (1.0 - s * C), g.y, "x_vu", region), 0.0};
      rep.P = C;
      break;
    case Region::NIVR:
      x = {detail::checked_mass(inv_p(g.p, A) - (1.0 - s * A) * g.y, 1.0 - g.y, "x_n", region),
           g.y, 0.0};
      rep.P = A;
      break;
    case Region::NRVR:
      x = {1.0 - g.y, g.y, 0.0};
      fixed_point = true;
      break;
    case Region::NCVR:
      x = {0.0, g.y, 0.0};
      fixed_point = true;
      break;
  }

  ConsistencyResult c;
  if (fixed_point) {
    c = solve_profile_P(g, x);
    rep.P = c.P;
  } else {
    c.P = rep.P;
    c.Q = rep.P * s;
    c.posterior_no_signal = posterior_no_signal(g, rep.P);
  }
  rep.Q = c.Q;
  rep.posterior = c.posterior_no_signal;
  rep.social_cost = profile_social_cost(g, x, c);
  return rep;
}

inline EquilibriumReport solve_equilibrium(const SignalingGame& g) {
  return closed_form(g, classify_region(g));
}

/// Equilibrium accident probability P(G).
inline double accident_probability(const SignalingGame& g) { return solve_equilibrium(g).P; }

/// Equilibrium social cost S(G).
inline double social_cost(const SignalingGame& g) { return solve_equilibrium(g).social_cost; }

}  // namespace v2vsig
