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

// Domain types of the V2V hazard-signaling game: the hazard curve p(d), the
// signal-reach curve q(y), the game tuple and behavior profiles.
//
// A population of unit mass drives either carefully or recklessly. A fraction
// y owns V2V cars. d is the total reckless mass and p(d) the resulting accident
// probability. When an accident happens, V2V cars broadcast a warning with
// probability q(y), and each V2V car displays a received warning with
// probability beta.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "v2vsig/error.hpp"
#include "v2vsig/root_finding.hpp"

namespace v2vsig {

// Arguments that overshoot [0, 1] by less than this are clamped; anything
// further out is a domain error. Absorbs rounding in 1 - y + y and friends.
inline constexpr double kDomainSlack = 1e-12;

// |p(d) - v| bound for numeric inversion.
inline constexpr double kInversionTolerance = 1e-12;

namespace detail {

inline std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

// Snaps v onto [0, 1] when it is within kDomainSlack of it; otherwise v is
// returned unchanged for the caller to reject.
inline double clamp_unit(double v) {
  if (v < 0.0 && v >= -kDomainSlack) return 0.0;
  if (v > 1.0 && v <= 1.0 + kDomainSlack) return 1.0;
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hazard curve p(d)

struct Affine {
  double slope = 0.0;
  double intercept = 0.0;
  friend bool operator==(const Affine&, const Affine&) = default;
};

struct Power {
  double exponent = 1.0;
  friend bool operator==(const Power&, const Power&) = default;
};

struct Knot {
  double d = 0.0;
  double p = 0.0;
  friend bool operator==(const Knot&, const Knot&) = default;
};

// Linear interpolation between knots. The first knot sits at d = 0 and the
// last at d = 1.
struct PiecewiseLinear {
  std::vector<Knot> knots;
  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;
};

class HazardCurve {
 public:
  using Family = std::variant<Affine, Power, PiecewiseLinear>;

  HazardCurve() : family_(Affine{1.0, 0.0}) {}
  explicit HazardCurve(Family family) : family_(std::move(family)) {}

  static HazardCurve affine(double slope, double intercept) {
    return HazardCurve(Affine{slope, intercept});
  }
  static HazardCurve power(double exponent) { return HazardCurve(Power{exponent}); }
  static HazardCurve table(std::vector<Knot> knots) {
    return HazardCurve(PiecewiseLinear{std::move(knots)});
  }

  const Family& family() const { return family_; }

  friend bool operator==(const HazardCurve&, const HazardCurve&) = default;

 private:
  Family family_;
};

namespace detail {

inline double eval_table(const PiecewiseLinear& t, double d) {
  const auto& k = t.knots;
  auto hi = std::upper_bound(k.begin(), k.end(), d,
                             [](double v, const Knot& kn) { return v < kn.d; });
  if (hi == k.begin()) return k.front().p;
  if (hi == k.end()) return k.back().p;
  auto lo = std::prev(hi);
  const double w = (d - lo->d) / (hi->d - lo->d);
  return lo->p + w * (hi->p - lo->p);
}

// Evaluation without the domain check; d must already lie in [0, 1].
inline double eval_p_unchecked(const HazardCurve& curve, double d) {
  return std::visit(
      [d](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Affine>) {
          return f.slope * d + f.intercept;
        } else if constexpr (std::is_same_v<T, Power>) {
          return std::pow(d, f.exponent);
        } else {
          return eval_table(f, d);
        }
      },
      curve.family());
}

}  // namespace detail

/// Accident probability p(d) for total reckless mass d in [0, 1].
inline double eval_p(const HazardCurve& curve, double d) {
  const double dc = detail::clamp_unit(d);
  if (!detail::in_unit(dc)) {
    throw InputError("hazard curve argument must lie in [0, 1] (got " +
                     detail::fmt_num(d) + ")");
  }
  return detail::eval_p_unchecked(curve, dc);
}

/// Reckless mass d with p(d) = v. Analytic for affine and power curves,
/// bisection to |p(d) - v| <= 1e-12 for tables.
inline double inv_p(const HazardCurve& curve, double v) {
  const double lo = detail::eval_p_unchecked(curve, 0.0);
  const double hi = detail::eval_p_unchecked(curve, 1.0);
  if (!(v >= lo - kDomainSlack && v <= hi + kDomainSlack)) {
    throw RangeError("cannot invert hazard curve at " + detail::fmt_num(v) +
                     ": value outside [p(0), p(1)] = [" + detail::fmt_num(lo) + ", " +
                     detail::fmt_num(hi) + "]");
  }
  v = std::clamp(v, lo, hi);
  const double d = std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Affine>) {
          return (v - f.intercept) / f.slope;
        } else if constexpr (std::is_same_v<T, Power>) {
          return std::pow(v, 1.0 / f.exponent);
        } else {
          auto r = root::bisect_increasing(
              [&](double x) { return detail::eval_table(f, x) - v; }, 0.0, 1.0,
              kInversionTolerance);
          return r.x;
        }
      },
      curve.family());
  return std::clamp(d, 0.0, 1.0);
}

/// Throws CurveError unless the curve is strictly increasing on [0, 1] with
/// 0 <= p(0) and p(1) <= 1.
inline void validate_curve(const HazardCurve& curve) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Affine>) {
          if (!std::isfinite(f.slope) || !(f.slope > 0.0))
            throw CurveError("affine hazard curve must be strictly increasing: slope > 0 (got " +
                             detail::fmt_num(f.slope) + ")");
          if (!std::isfinite(f.intercept) || f.intercept < 0.0)
            throw CurveError("hazard curve must satisfy p(0) >= 0 (got " +
                             detail::fmt_num(f.intercept) + ")");
          if (f.slope + f.intercept > 1.0)
            throw CurveError("hazard curve must satisfy p(1) <= 1 (got " +
                             detail::fmt_num(f.slope + f.intercept) + ")");
        } else if constexpr (std::is_same_v<T, Power>) {
          if (!std::isfinite(f.exponent) || !(f.exponent > 0.0))
            throw CurveError("power hazard curve must be strictly increasing: exponent > 0 (got " +
                             detail::fmt_num(f.exponent) + ")");
        } else {
          const auto& k = f.knots;
          if (k.size() < 2) throw CurveError("hazard table needs at least two knots");
          if (k.front().d != 0.0 || k.back().d != 1.0)
            throw CurveError("hazard table must span d = 0 to d = 1");
          for (std::size_t i = 0; i < k.size(); ++i) {
            if (!std::isfinite(k[i].d) || !std::isfinite(k[i].p))
              throw CurveError("hazard table knots must be finite");
            if (i > 0 && !(k[i].d > k[i - 1].d))
              throw CurveError("hazard table knots must be strictly increasing in d");
            if (i > 0 && !(k[i].p > k[i - 1].p))
              throw CurveError("hazard table must be strictly increasing: knot p values must increase");
          }
          if (k.front().p < 0.0)
            throw CurveError("hazard curve must satisfy p(0) >= 0 (got " +
                             detail::fmt_num(k.front().p) + ")");
          if (k.back().p > 1.0)
            throw CurveError("hazard curve must satisfy p(1) <= 1 (got " +
                             detail::fmt_num(k.back().p) + ")");
        }
      },
      curve.family());
}

// ---------------------------------------------------------------------------
// Signal reach q(y)

struct LinearReach {
  double slope = 0.0;
  friend bool operator==(const LinearReach&, const LinearReach&) = default;
};

struct ConstantReach {
  double value = 0.0;
  friend bool operator==(const ConstantReach&, const ConstantReach&) = default;
};

class SignalReachCurve {
 public:
  using Family = std::variant<LinearReach, ConstantReach>;

  SignalReachCurve() : family_(LinearReach{0.0}) {}
  explicit SignalReachCurve(Family family) : family_(std::move(family)) {}

  static SignalReachCurve linear(double slope) { return SignalReachCurve(LinearReach{slope}); }
  static SignalReachCurve constant(double value) {
    return SignalReachCurve(ConstantReach{value});
  }

  const Family& family() const { return family_; }

  friend bool operator==(const SignalReachCurve&, const SignalReachCurve&) = default;

 private:
  Family family_;
};

/// Probability q(y) that an accident is detected and broadcast.
inline double eval_q(const SignalReachCurve& curve, double y) {
  if (!detail::in_unit(y)) {
    throw InputError("signal reach argument must lie in [0, 1] (got " + detail::fmt_num(y) +
                     ")");
  }
  return std::visit(
      [y](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, LinearReach>) {
          return f.slope * y;
        } else {
          return f.value;
        }
      },
      curve.family());
}

inline void validate_curve(const SignalReachCurve& curve) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, LinearReach>) {
          if (!detail::in_unit(f.slope))
            throw CurveError("linear signal reach needs slope in [0, 1] so q(y) stays in [0, 1] (got " +
                             detail::fmt_num(f.slope) + ")");
        } else {
          if (!detail::in_unit(f.value))
            throw CurveError("constant signal reach must lie in [0, 1] (got " +
                             detail::fmt_num(f.value) + ")");
        }
      },
      curve.family());
}

// ---------------------------------------------------------------------------
// Game and behavior

struct SignalingGame {
  double beta = 0.0;  // probability a received warning is displayed
  double y = 0.0;     // V2V penetration
  double r = 2.0;     // cost of driving recklessly into an accident
  HazardCurve p;
  SignalReachCurve q;

  /// beta * q(y): probability that an accident produces a displayed warning.
  double signal_strength() const { return beta * eval_q(q, y); }

  SignalingGame with_beta(double b) const {
    SignalingGame g = *this;
    g.beta = b;
    return g;
  }

  friend bool operator==(const SignalingGame&, const SignalingGame&) = default;
};

/// Reckless masses among non-V2V, unsignaled V2V and signaled V2V drivers.
struct BehaviorProfile {
  double x_n = 0.0;
  double x_vu = 0.0;
  double x_vs = 0.0;
  friend bool operator==(const BehaviorProfile&, const BehaviorProfile&) = default;
};

/// Returns g unchanged when beta, y in [0, 1], r > 1 and both curves are
/// admissible; throws ParameterError or CurveError otherwise.
inline SignalingGame validate_game(const SignalingGame& g) {
  if (!std::isfinite(g.r) || !(g.r > 1.0))
    throw ParameterError("accident cost must satisfy r > 1 (got " + detail::fmt_num(g.r) + ")");
  if (!detail::in_unit(g.beta))
    throw ParameterError("signal quality must satisfy beta in [0, 1] (got " +
                         detail::fmt_num(g.beta) + ")");
  if (!detail::in_unit(g.y))
    throw ParameterError("V2V penetration must satisfy y in [0, 1] (got " +
                         detail::fmt_num(g.y) + ")");
  validate_curve(g.p);
  validate_curve(g.q);
  return g;
}

inline void validate_profile(const SignalingGame& g, const BehaviorProfile& x) {
  auto check = [](double v, double hi, const char* what) {
    if (!(v >= 0.0 && v <= hi + kDomainSlack))
      throw ParameterError(std::string(what) + " must lie in [0, " + detail::fmt_num(hi) +
                           "] (got " + detail::fmt_num(v) + ")");
  };
  check(x.x_n, 1.0 - g.y, "x_n");
  check(x.x_vu, g.y, "x_vu");
  check(x.x_vs, g.y, "x_vs");
}

}  // namespace v2vsig
