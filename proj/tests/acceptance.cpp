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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/random_games.hpp"
#include "v2vsig/v2vsig.hpp"

namespace v2vsig {
namespace {

using Clock = std::chrono::steady_clock;

// Collects failed checks for one criterion.
struct Verdict {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  int failed = 0;
};

std::string str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int report(const char* id, const char* title, double budget_s,
           const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.expect(false, std::string("threw: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  v.expect(secs < budget_s, "took " + str(secs) + " s, budget " + str(budget_s) + " s");
  std::printf("%s %s: %s (%.3f s)\n", v.failed ? "FAIL" : "PASS", id, title, secs);
  for (const auto& f : v.failures) std::printf("    %s\n", f.c_str());
  if (v.failed > static_cast<int>(v.failures.size()))
    std::printf("    ... %d more\n", v.failed - static_cast<int>(v.failures.size()));
  return v.failed ? 1 : 0;
}

const SignalReachCurve kReach = SignalReachCurve::linear(0.9);

void steep_hazard(Verdict& v) {
  const SignalingGame g{0.0, 0.7, 20.0, HazardCurve::affine(0.8, 0.1), kReach};
  const double p0 = accident_probability(g);
  const double p1 = accident_probability(g.with_beta(1.0));
  v.expect(p0 == 0.1, "P(0) = " + str(p0) + ", want exactly 0.1");
  v.expect(std::abs(p1 - 1.0 / 8.4) <= 1e-9, "P(1) = " + str(p1) + ", want 1/8.4");
  const DesignResult d = optimal_beta_accidents(g);
  v.expect(d.beta_star == 0.0, "optimal beta = " + str(d.beta_star) + ", want 0");
}

void costly_information(Verdict& v) {
  const SignalingGame g{0.0, 0.07, 1.001, HazardCurve::power(0.25), kReach};
  const double s09 = social_cost(g.with_beta(0.9));
  const double s1 = social_cost(g.with_beta(1.0));
  v.expect(std::abs(s09 - 0.4889) <= 5e-4, "S(0.9) = " + str(s09) + ", want 0.4889");
  v.expect(std::abs(s1 - 0.4890) <= 5e-4, "S(1) = " + str(s1) + ", want 0.4890");
  v.expect(s09 < s1, "S(0.9) = " + str(s09) + " not below S(1) = " + str(s1));
}

void peaked_sweep(Verdict& v) {
  const SignalingGame g{0.0, 0.9, 3.0, HazardCurve::affine(0.3, 0.1), kReach};
  const auto rs = sweep_beta(g, 101);
  const double p0 = rs.front().P, p1 = rs.back().P;
  v.expect(std::abs(p0 - 0.25) <= 1e-9, "P(0) = " + str(p0) + ", want 0.25");
  v.expect(std::abs(p1 - 0.37 / 1.2187) <= 1e-9, "P(1) = " + str(p1) + ", want 0.37/1.2187");
  v.expect(p1 > p0, "P(1) not above P(0)");
  const auto peak = std::max_element(rs.begin(), rs.end(),
                                     [](const auto& a, const auto& b) { return a.P < b.P; });
  for (auto it = rs.begin() + 1; it != rs.end(); ++it) {
    const bool ok = it <= peak ? it->P >= (it - 1)->P - 1e-9 : it->P <= (it - 1)->P + 1e-9;
    v.expect(ok, "not single-peaked at beta = " + str(it->beta));
  }
  v.expect(peak->beta >= 0.38 && peak->beta <= 0.48,
           "peak at beta = " + str(peak->beta) + ", want [0.38, 0.48]");
}

void oracle_agreement(Verdict& v) {
  testing::GameGenerator gen(2026);
  for (int i = 0; i < 200; ++i) {
    const SignalingGame g = gen.game();
    const auto set = oracle::epsilon_equilibria(g, 0.01, 1e-3);
    const auto a = oracle::compare_with_closed_form(g, set);
    const std::string where = "game " + std::to_string(i) + " (" +
                              std::string(to_string(classify_region(g))) + "): ";
    v.expect(a.members > 0, where + "empty eps-equilibrium set");
    v.expect(a.max_mass_gap <= 0.03, where + "mass gap " + str(a.max_mass_gap));
    v.expect(a.max_P_gap <= 0.02, where + "P gap " + str(a.max_P_gap));
  }
}

bool threshold_form(const SignalingGame& g, const BehaviorProfile& x) {
  if (x.x_vs != 0.0) return false;
  if (x.x_n == 0.0) return x.x_vu >= 0.0 && x.x_vu <= g.y;
  return x.x_vu == g.y && x.x_n <= 1.0 - g.y;
}

bool in_range(const SignalingGame& g, const EquilibriumReport& e) {
  constexpr double tol = 1e-9;
  const auto [s, A, C] = thresholds(g);
  switch (e.region) {
    case Region::NCVC: return std::abs(e.P - eval_p(g.p, 0.0)) <= tol && e.P > C - tol;
    case Region::NCVI: return std::abs(e.P - C) <= tol;
    case Region::NCVR: return A - tol < e.P && e.P < C + tol;
    case Region::NIVR: return std::abs(e.P - A) <= tol;
    case Region::NRVR: return e.P < A + tol;
  }
  return false;
}

void invariants(Verdict& v) {
  testing::GameGenerator gen(4242);
  for (int i = 0; i < 1000; ++i) {
    const SignalingGame g = gen.game();
    const std::string where = "game " + std::to_string(i) + ": ";
    const auto [s, A, C] = thresholds(g);

    // Unsignaled drivers prefer caution exactly when P is below the signal threshold.
    const double P = i % 2 ? C : gen.uniform(0.0, 1.0);
    auto sign = [](double d) { return std::abs(d) <= 1e-9 ? 0 : (d < 0 ? -1 : 1); };
    v.expect(sign(posterior_no_signal(g, P) - A) == sign(P - C), where + "posterior threshold");

    const EquilibriumReport e = solve_equilibrium(g);
    v.expect(in_range(g, e), where + "P = " + str(e.P) + " outside its region's range");
    v.expect(threshold_form(g, e.x_ne), where + "profile not of threshold form");
    v.expect(oracle::check_equilibrium_conditions(g, e.x_ne, 1e-9).holds,
             where + "closed form fails the equilibrium conditions");

    // Closed forms on both sides of each region switch along beta meet.
    Region prev = classify_region(g.with_beta(0.0));
    for (int k = 1; k <= 100; ++k) {
      const double b = k / 100.0;
      const Region cur = classify_region(g.with_beta(b));
      if (cur != prev) {
        double lo = (k - 1) / 100.0, hi = b;
        for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
          const double m = 0.5 * (lo + hi);
          (classify_region(g.with_beta(m)) == prev ? lo : hi) = m;
        }
        const double Pl = closed_form(g.with_beta(lo), prev).P;
        const double Ph = closed_form(g.with_beta(hi), cur).P;
        v.expect(std::abs(Pl - Ph) <= 1e-9, where + "jump " + str(Ph - Pl) + " at beta " + str(lo));
      }
      prev = cur;
    }

    const auto rs = sweep_beta(g, 101);
    std::size_t j = 1;
    while (j < rs.size() && rs[j].P >= rs[j - 1].P - 1e-9) ++j;
    while (j < rs.size() && rs[j].P <= rs[j - 1].P + 1e-9) ++j;
    v.expect(j == rs.size(), where + "P(beta) not single-peaked");
  }
}

void trade_off(Verdict& v) {
  const SignalingGame g{0.0, 0.07, 1.001, HazardCurve::power(0.25), kReach};
  const auto rs = sweep_beta(g, 101, 0.9, 1.0);
  bool witnessed = false;
  for (std::size_t i = 0; i + 1 < rs.size(); ++i)
    witnessed = witnessed || (rs[i + 1].P < rs[i].P && rs[i + 1].S > rs[i].S);
  v.expect(witnessed, "no beta step lowers P while raising S");
}

}  // namespace
}  // namespace v2vsig

int main() {
  using namespace v2vsig;
  int failed = 0;
  failed += report("AC1", "no-signal design minimises accidents under a steep hazard", 1.0,
                   steep_hazard);
  failed += report("AC2", "partial signaling beats full signaling on social cost", 1.0,
                   costly_information);
  failed += report("AC3", "accident probability peaks at intermediate signal quality", 2.0,
                   peaked_sweep);
  failed += report("AC4", "brute-force oracle agrees on 200 random games", 60.0,
                   oracle_agreement);
  failed += report("AC5", "structural invariants hold on 1000 random games", 30.0, invariants);
  failed += report("AC6", "accidents fall while social cost rises", 5.0, trade_off);
  return failed ? 1 : 0;
}
