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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "support/random_games.hpp"
#include "support/reference.hpp"
#include "v2vsig/equilibrium.hpp"
#include "v2vsig/oracle.hpp"

namespace v2vsig {
namespace {

const SignalReachCurve kReach = SignalReachCurve::linear(0.9);
const SignalingGame kSteepHazard{0.0, 0.7, 20.0, HazardCurve::affine(0.8, 0.1), kReach};
const SignalingGame kPeaked{0.0, 0.9, 3.0, HazardCurve::affine(0.3, 0.1), kReach};
const SignalingGame kCostlyInformation{0.0, 0.07, 1.001, HazardCurve::power(0.25), kReach};

TEST(ClassifyRegion, ReferenceGames) {
  EXPECT_EQ(classify_region(kSteepHazard.with_beta(0.0)), Region::NCVC);
  EXPECT_EQ(classify_region(kSteepHazard.with_beta(1.0)), Region::NCVI);
  // 0.2307 < 0.6369 and 0.25 < 0.3153.
  EXPECT_EQ(classify_region(kPeaked.with_beta(1.0)), Region::NCVR);
  EXPECT_EQ(classify_region(kCostlyInformation.with_beta(0.9)), Region::NCVR);
  EXPECT_EQ(classify_region(kCostlyInformation.with_beta(1.0)), Region::NCVR);
}

TEST(ClassifyRegion, NoSignalPeakedGameIsV2VIndifferent) {
  // With beta = 0 both thresholds equal 1/(1+r) = 0.25 and p(0) <= 0.25 <=
  // p(0.9) = 0.37; p(0.9) > 0.25 rules out the non-V2V-indifferent range.
  EXPECT_EQ(classify_region(kPeaked), Region::NCVI);
  EXPECT_FALSE(satisfies_region(kPeaked, Region::NIVR));
}

TEST(SolveEquilibrium, SteepHazardNoSignals) {
  const auto e = solve_equilibrium(kSteepHazard);
  EXPECT_EQ(e.x_ne, (BehaviorProfile{0.0, 0.0, 0.0}));
  EXPECT_DOUBLE_EQ(e.P, 0.1);
}

TEST(SolveEquilibrium, SteepHazardFullSignals) {
  const auto e = solve_equilibrium(kSteepHazard.with_beta(1.0));
  EXPECT_NEAR(e.P, 1.0 / 8.4, 1e-15);
  EXPECT_NEAR(e.P, 0.1190, 5e-5);
  EXPECT_EQ(e.x_ne.x_n, 0.0);
  EXPECT_GT(e.x_ne.x_vu, 0.0);
  EXPECT_LT(e.x_ne.x_vu, 0.7);
}

TEST(SolveEquilibrium, PeakedFullSignals) {
  const auto e = solve_equilibrium(kPeaked.with_beta(1.0));
  EXPECT_EQ(e.region, Region::NCVR);
  EXPECT_EQ(e.x_ne, (BehaviorProfile{0.0, 0.9, 0.0}));
  EXPECT_NEAR(e.P, 0.303602199064577008, 1e-12);
  EXPECT_NEAR(e.P, reference::equilibrium_P(kPeaked.with_beta(1.0)), 1e-12);
}

TEST(SolveEquilibrium, NonV2VIndifferentRange) {
  // s = 0.225, A = 0.25: p(0.471875) = 0.2416 <= A <= p(0.971875) = 0.3916.
  const SignalingGame g{0.5, 0.5, 3.0, HazardCurve::affine(0.3, 0.1), kReach};
  const auto e = solve_equilibrium(g);
  EXPECT_EQ(e.region, Region::NIVR);
  EXPECT_NEAR(e.x_ne.x_n, 0.028125, 1e-12);
  EXPECT_EQ(e.x_ne.x_vu, 0.5);
  EXPECT_DOUBLE_EQ(e.P, 0.25);
}

TEST(SolveEquilibrium, AllRecklessRange) {
  const SignalingGame g{0.0, 0.9, 1.5, HazardCurve::affine(0.2, 0.1), kReach};
  const auto e = solve_equilibrium(g);
  EXPECT_EQ(e.region, Region::NRVR);
  EXPECT_NEAR(e.x_ne.x_n, 0.1, 1e-15);
  EXPECT_EQ(e.x_ne.x_vu, 0.9);
}

TEST(SolveEquilibrium, WrongRegionIsALogicError) {
  // The non-V2V-indifferent form would need x_n = 0.5 - 0.9 < 0 here.
  EXPECT_THROW(closed_form(kPeaked, Region::NIVR), LogicError);
}

TEST(AccidentProbability, KnownValues) {
  EXPECT_NEAR(accident_probability(kPeaked), 0.25, 1e-12);
  EXPECT_NEAR(accident_probability(kSteepHazard.with_beta(1.0)), 0.119047619047619048, 1e-12);
  const SignalingGame g{0.0, 0.9, 1.5, HazardCurve::affine(0.2, 0.1), kReach};
  EXPECT_NEAR(accident_probability(g), 0.3, 1e-12);
}

TEST(SocialCost, CostlyInformation) {
  const double s09 = social_cost(kCostlyInformation.with_beta(0.9));
  const double s10 = social_cost(kCostlyInformation.with_beta(1.0));
  EXPECT_NEAR(s09, 0.4889, 5e-4);
  EXPECT_NEAR(s10, 0.4890, 5e-4);
  EXPECT_LT(s09, s10);
}

TEST(SocialCost, AllCarefulWithoutSignals) {
  // x = 0, Q = 0, posterior = P = p(0): only caution regret remains.
  EXPECT_NEAR(social_cost(kSteepHazard), 1.0 - 0.1, 1e-15);
}

TEST(EssentialUniqueness, NoSignalSliceAdmitsOtherProfiles) {
  // beta q(y) = 0: any profile with x_n + x_vu = p^{-1}(1/(1+r)) = 0.5 is an
  // equilibrium. The solver returns the canonical one.
  const auto e = solve_equilibrium(kPeaked);
  EXPECT_NEAR(e.x_ne.x_vu, 0.5, 1e-12);
  const BehaviorProfile alt{0.05, 0.45, 0.0};
  EXPECT_TRUE(oracle::check_equilibrium_conditions(kPeaked, alt, 1e-9).holds);
  const auto c = solve_profile_P(kPeaked, alt);
  EXPECT_NEAR(aggregate_reckless_mass(alt, c), 0.5, 1e-12);
  EXPECT_NEAR(c.P, e.P, 1e-12);
}

// ---------------------------------------------------------------------------
// Properties over random games

bool has_threshold_form(const SignalingGame& g, const BehaviorProfile& x) {
  if (x.x_vs != 0.0) return false;
  if (x.x_n == 0.0 && x.x_vu >= 0.0 && x.x_vu <= g.y) return true;
  return x.x_vu == g.y && x.x_n >= 0.0 && x.x_n <= 1.0 - g.y;
}

bool in_region_range(const SignalingGame& g, const EquilibriumReport& e) {
  constexpr double tol = 1e-9;
  const auto [s, A, C] = thresholds(g);
  switch (e.region) {
    case Region::NRVR: return e.P < A + tol;
    case Region::NIVR: return std::abs(e.P - A) <= tol;
    case Region::NCVC: return std::abs(e.P - eval_p(g.p, 0.0)) <= tol;
    case Region::NCVI: return std::abs(e.P - C) <= tol;
    case Region::NCVR: return A - tol < e.P && e.P < C + tol;
  }
  return false;
}

TEST(EquilibriumProperty, RandomGames) {
  testing::GameGenerator gen(21);
  std::array<int, 5> seen{};
  for (int i = 0; i < 1000; ++i) {
    const SignalingGame g = gen.game();
    const auto e = solve_equilibrium(g);
    ++seen[static_cast<int>(e.region)];
    SCOPED_TRACE(std::string(to_string(e.region)) + " beta=" + std::to_string(g.beta));

    EXPECT_TRUE(has_threshold_form(g, e.x_ne));
    EXPECT_TRUE(in_region_range(g, e)) << "P=" << e.P;
    EXPECT_NEAR(solve_profile_P(g, e.x_ne).P, e.P, 1e-9);
    EXPECT_TRUE(oracle::check_equilibrium_conditions(g, e.x_ne, 1e-9).holds);
    EXPECT_NEAR(e.P, reference::equilibrium_P(g), 1e-9);
    EXPECT_TRUE(satisfies_region(g, e.region));
  }
  for (Region r : kAllRegions) EXPECT_GT(seen[static_cast<int>(r)], 0) << to_string(r);
}

// Walk a parameter across region seams and compare the two closed forms on
// either side of each switch point.
template <typename MakeGame>
int check_seams(MakeGame make, double lo, double hi, int samples) {
  int seams = 0;
  double prev_t = lo;
  Region prev = classify_region(make(lo));
  for (int k = 1; k <= samples; ++k) {
    const double t = lo + (hi - lo) * k / samples;
    const Region cur = classify_region(make(t));
    if (cur != prev) {
      double a = prev_t, b = t;
      for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
        const double m = 0.5 * (a + b);
        (classify_region(make(m)) == prev ? a : b) = m;
      }
      const double Pa = closed_form(make(a), classify_region(make(a))).P;
      const double Pb = closed_form(make(b), classify_region(make(b))).P;
      EXPECT_NEAR(Pa, Pb, 1e-9) << to_string(prev) << " -> " << to_string(cur) << " at " << a;
      ++seams;
    }
    prev = cur;
    prev_t = t;
  }
  return seams;
}

TEST(EquilibriumProperty, BoundaryContinuity) {
  testing::GameGenerator gen(22);
  int seams = 0;
  for (int i = 0; i < 1000; ++i) {
    const SignalingGame g = gen.game();
    seams += check_seams([&](double b) { return g.with_beta(b); }, 0.0, 1.0, 100);
    seams += check_seams(
        [&](double r) {
          SignalingGame h = g;
          h.r = r;
          return h;
        },
        1.001, 25.0, 100);
  }
  EXPECT_GT(seams, 200);
}

TEST(EquilibriumProperty, SeamsBetweenAllReachableNeighbours) {
  // Both non-V2V-indifferent and all-reckless ranges appear when p is low.
  const SignalingGame g{0.0, 0.9, 1.5, HazardCurve::affine(0.2, 0.1), kReach};
  EXPECT_GE(check_seams(
                [&](double r) {
                  SignalingGame h = g.with_beta(0.6);
                  h.r = r;
                  return h;
                },
                1.001, 25.0, 400),
            2);
}

}  // namespace
}  // namespace v2vsig
