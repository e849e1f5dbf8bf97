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

// Brute-force verification of the closed forms.
//
// Nothing here consults the region classifier. Equilibria are found from the
// cost definitions alone: a profile qualifies when every group that uses an
// action pays at most eps more for it than for the alternative.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string_view>
#include <vector>

#include "v2vsig/consistency.hpp"
#include "v2vsig/equilibrium.hpp"
#include "v2vsig/hazard_model.hpp"
#include "v2vsig/root_finding.hpp"

namespace v2vsig::oracle {

struct ConditionCheck {
  std::string_view name;
  bool applies = false;    // premise holds, e.g. x_n < 1 - y
  bool satisfied = true;   // vacuous when !applies
  double cost_gap = 0.0;   // cost(used action) - cost(other action)
};

struct ConditionReport {
  bool holds = true;
  std::array<ConditionCheck, 6> conditions{};
  ConsistencyResult consistency;

  /// Conditions whose premise holds and whose inequality is tight within eps.
  std::vector<std::string_view> binding(double eps) const {
    std::vector<std::string_view> out;
    for (const auto& c : conditions)
      if (c.applies && std::abs(c.cost_gap) <= eps) out.push_back(c.name);
    return out;
  }
};

namespace detail {

inline ConditionReport check_with(const SignalingGame& g, const BehaviorProfile& x,
                                  const ConsistencyResult& c, double eps) {
  const CostTable J = group_costs(g, c);
  ConditionReport rep;
  rep.consistency = c;
  auto set = [&](std::size_t i, std::string_view name, bool premise, double used, double other) {
    rep.conditions[i] = {name, premise, !premise || used <= other + eps, used - other};
    rep.holds = rep.holds && rep.conditions[i].satisfied;
  };
  set(0, "non_v2v_careful", x.x_n < 1.0 - g.y, J.n_careful, J.n_reckless);
  set(1, "non_v2v_reckless", x.x_n > 0.0, J.n_reckless, J.n_careful);
  set(2, "unsignaled_careful", x.x_vu < g.y, J.vu_careful, J.vu_reckless);
  set(3, "unsignaled_reckless", x.x_vu > 0.0, J.vu_reckless, J.vu_careful);
  set(4, "signaled_careful", x.x_vs < g.y, J.vs_careful, J.vs_reckless);
  set(5, "signaled_reckless", x.x_vs > 0.0, J.vs_reckless, J.vs_careful);
  return rep;
}

// Nodes k * step on [0, bound], always including bound itself.
inline std::vector<double> axis(double bound, double step) {
  std::vector<double> v;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * step;
    if (t >= bound - 1e-9 * step) break;
    v.push_back(t);
  }
  v.push_back(bound);
  return v;
}

}  // namespace detail

/// Tests the six equilibrium implications at profile x with cost slack eps,
/// using the profile's own consistent P and posterior.
inline ConditionReport check_equilibrium_conditions(const SignalingGame& g,
                                                    const BehaviorProfile& x, double eps) {
  return detail::check_with(g, x, solve_profile_P(g, x), eps);
}

struct EpsilonEquilibriumSet {
  double epsilon = 0.0;
  double grid_step = 0.0;
  std::vector<BehaviorProfile> members;
  std::size_t nodes_scanned = 0;
  std::size_t edge_points = 0;  // off-node members found by edge refinement
};

/// All eps-equilibria on the (x_n, x_vu) grid over [0, 1-y] x [0, y], x_vs = 0.
///
/// With `refine_edges`, every grid edge across which a group's cost gap
/// changes sign is bisected to its indifference point and that point is
/// tested too. Interior indifference generally falls between nodes, and with
/// a steep p no node lands within eps of it.
inline EpsilonEquilibriumSet epsilon_equilibria(const SignalingGame& g, double grid_step,
                                                double eps, bool refine_edges = true) {
  if (!(grid_step > 0.0)) throw InputError("oracle grid step must be positive");
  if (g.y > 0.0 && g.y < 1.0 && grid_step > std::min(g.y, 1.0 - g.y))
    throw InputError("oracle grid step must not exceed min(y, 1 - y)");
  if (!(eps > 0.0)) throw InputError("oracle epsilon must be positive");

  const auto xs_n = detail::axis(1.0 - g.y, grid_step);
  const auto xs_vu = detail::axis(g.y, grid_step);
  const std::size_t nn = xs_n.size(), nv = xs_vu.size();

  EpsilonEquilibriumSet out;
  out.epsilon = eps;
  out.grid_step = grid_step;

  // Gaps J(R) - J(C): positive means caution is strictly cheaper.
  std::vector<double> gap_n(nn * nv), gap_vu(nn * nv);
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      const BehaviorProfile x{xs_n[i], xs_vu[j], 0.0};
      const auto c = solve_profile_P(g, x);
      const CostTable J = group_costs(g, c);
      gap_n[i * nv + j] = J.n_reckless - J.n_careful;
      gap_vu[i * nv + j] = J.vu_reckless - J.vu_careful;
      ++out.nodes_scanned;
      if (detail::check_with(g, x, c, eps).holds) out.members.push_back(x);
    }
  }
  if (!refine_edges) return out;

  // Both gaps increase with P, and P increases in x_n and x_vu, so each gap
  // is monotone along an edge.
  auto refine = [&](BehaviorProfile a, BehaviorProfile b, double ga, double gb, bool use_n) {
    if (!((ga < 0.0 && gb > 0.0) || (ga > 0.0 && gb < 0.0))) return;
    auto at = [&](double t) {
      return BehaviorProfile{a.x_n + t * (b.x_n - a.x_n), a.x_vu + t * (b.x_vu - a.x_vu), 0.0};
    };
    const double sign = ga < 0.0 ? 1.0 : -1.0;
    auto f = [&](double t) {
      const auto c = solve_profile_P(g, at(t));
      const CostTable J = group_costs(g, c);
      return sign * (use_n ? J.n_reckless - J.n_careful : J.vu_reckless - J.vu_careful);
    };
    const auto root = root::bisect_increasing(f, 0.0, 1.0, kConsistencyTolerance);
    const BehaviorProfile x = at(root.x);
    if (check_equilibrium_conditions(g, x, eps).holds) {
      out.members.push_back(x);
      ++out.edge_points;
    }
  };
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      const std::size_t k = i * nv + j;
      const BehaviorProfile here{xs_n[i], xs_vu[j], 0.0};
      if (i + 1 < nn) {
        const BehaviorProfile next{xs_n[i + 1], xs_vu[j], 0.0};
        refine(here, next, gap_n[k], gap_n[k + nv], true);
        refine(here, next, gap_vu[k], gap_vu[k + nv], false);
      }
      if (j + 1 < nv) {
        const BehaviorProfile next{xs_n[i], xs_vu[j + 1], 0.0};
        refine(here, next, gap_n[k], gap_n[k + 1], true);
        refine(here, next, gap_vu[k], gap_vu[k + 1], false);
      }
    }
  }
  return out;
}

/// How far an eps-equilibrium set strays from the closed-form equilibrium,
/// in aggregate reckless mass and in accident probability.
struct Agreement {
  std::size_t members = 0;
  double closed_form_P = 0.0;
  double closed_form_mass = 0.0;
  double max_mass_gap = 0.0;
  double max_P_gap = 0.0;

  bool within(double mass_tol, double p_tol) const {
    return members > 0 && max_mass_gap <= mass_tol && max_P_gap <= p_tol;
  }
};

inline Agreement compare_with_closed_form(const SignalingGame& g,
                                          const EpsilonEquilibriumSet& set) {
  const EquilibriumReport eq = solve_equilibrium(g);
  Agreement a;
  a.members = set.members.size();
  a.closed_form_P = eq.P;
  a.closed_form_mass = eq.x_ne.x_n + (1.0 - eq.Q) * eq.x_ne.x_vu;
  for (const auto& x : set.members) {
    const auto c = solve_profile_P(g, x);
    a.max_mass_gap =
        std::max(a.max_mass_gap, std::abs(aggregate_reckless_mass(x, c) - a.closed_form_mass));
    a.max_P_gap = std::max(a.max_P_gap, std::abs(c.P - eq.P));
  }
  return a;
}

struct Trajectory {
  std::vector<BehaviorProfile> path;  // x0 followed by every iterate
  bool converged = false;             // last update moved no mass by more than 1e-12
  ConditionReport final_check;
};

/// Damped best-response dynamics x <- x + rate (BR(x) - x). Each group moves
/// toward all-careful or all-reckless when one action is strictly cheaper
/// and holds its mass when indifferent.
inline Trajectory best_response_dynamics(const SignalingGame& g, BehaviorProfile x0,
                                         std::size_t steps, double rate,
                                         double check_eps = 1e-6) {
  if (!(rate > 0.0 && rate <= 1.0)) throw InputError("best-response rate must lie in (0, 1]");
  validate_profile(g, x0);
  constexpr double kIndifference = 1e-12;
  constexpr double kSnap = 1e-14;
  auto target = [](double gap, double current, double full) {
    if (gap > kIndifference) return 0.0;
    if (gap < -kIndifference) return full;
    return current;
  };

  Trajectory tr;
  tr.path.reserve(steps + 1);
  tr.path.push_back(x0);
  BehaviorProfile x = x0;
  double last_move = 0.0;
  for (std::size_t t = 0; t < steps; ++t) {
    const CostTable J = group_costs(g, solve_profile_P(g, x));
    const BehaviorProfile br{target(J.n_reckless - J.n_careful, x.x_n, 1.0 - g.y),
                             target(J.vu_reckless - J.vu_careful, x.x_vu, g.y),
                             target(J.vs_reckless - J.vs_careful, x.x_vs, g.y)};
    // Geometric approach to a bound stalls one ulp short of it in floating
    // point, which would still count as "some drivers careful".
    auto step = [&](double cur, double tgt) {
      const double v = cur + rate * (tgt - cur);
      return std::abs(v - tgt) <= kSnap ? tgt : v;
    };
    const BehaviorProfile next{step(x.x_n, br.x_n), step(x.x_vu, br.x_vu), step(x.x_vs, br.x_vs)};
    last_move = std::max({std::abs(next.x_n - x.x_n), std::abs(next.x_vu - x.x_vu),
                          std::abs(next.x_vs - x.x_vs)});
    x = next;
    tr.path.push_back(x);
  }
  tr.converged = last_move <= 1e-12;
  tr.final_check = check_equilibrium_conditions(g, x, check_eps);
  return tr;
}

}  // namespace v2vsig::oracle
