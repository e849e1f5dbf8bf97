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

// Scenario files: a small YAML mapping describing one game family.
//
//   hazard: {family: affine, slope: 0.3, intercept: 0.1}
//   signal_reach: {family: linear, slope: 0.9}
//   y: 0.9
//   r: 3
//   beta: {min: 0, max: 1, count: 101}     # or a single number
//
// See docs/scenario_format.md for the full grammar.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "v2vsig/error.hpp"
#include "v2vsig/hazard_model.hpp"

namespace v2vsig {

// Malformed or invalid scenario file.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

struct BetaSweep {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 101;
  friend bool operator==(const BetaSweep&, const BetaSweep&) = default;
};

struct Scenario {
  HazardCurve hazard;
  SignalReachCurve signal_reach;
  double y = 0.0;
  double r = 2.0;
  std::variant<double, BetaSweep> beta = 0.0;

  bool is_sweep() const { return std::holds_alternative<BetaSweep>(beta); }

  SignalingGame game_at(double b) const { return SignalingGame{b, y, r, hazard, signal_reach}; }

  /// The single beta, or the sweep grid.
  std::vector<double> betas() const {
    if (const double* b = std::get_if<double>(&beta)) return {*b};
    const auto& s = std::get<BetaSweep>(beta);
    std::vector<double> out(s.count);
    for (std::size_t i = 0; i < s.count; ++i)
      out[i] = i + 1 == s.count ? s.max
                                : s.min + (s.max - s.min) * static_cast<double>(i) /
                                              static_cast<double>(s.count - 1);
    return out;
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

namespace detail {

inline double read_number(const YAML::Node& node, const std::string& key) {
  if (!node || !node.IsScalar()) throw ScenarioError("'" + key + "' must be a number");
  const std::string text = node.Scalar();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
    throw ScenarioError("'" + key + "' must be a finite number (got '" + text + "')");
  return v;
}

inline const YAML::Node require(const YAML::Node& map, const std::string& key,
                                const std::string& where) {
  const YAML::Node n = map[key];
  if (!n) throw ScenarioError(where + " is missing required key '" + key + "'");
  return n;
}

inline void reject_unknown(const YAML::Node& map, std::set<std::string> allowed,
                           const std::string& where) {
  for (const auto& kv : map) {
    const auto k = kv.first.as<std::string>();
    if (!allowed.count(k)) throw ScenarioError(where + " has unknown key '" + k + "'");
  }
}

inline HazardCurve read_hazard(const YAML::Node& n) {
  if (!n.IsMap()) throw ScenarioError("'hazard' must be a mapping with a 'family' key");
  const auto family = require(n, "family", "hazard").as<std::string>();
  if (family == "affine") {
    reject_unknown(n, {"family", "slope", "intercept"}, "hazard");
    return HazardCurve::affine(read_number(require(n, "slope", "hazard"), "hazard.slope"),
                               read_number(require(n, "intercept", "hazard"), "hazard.intercept"));
  }
  if (family == "power") {
    reject_unknown(n, {"family", "exponent"}, "hazard");
    return HazardCurve::power(read_number(require(n, "exponent", "hazard"), "hazard.exponent"));
  }
  if (family == "table") {
    reject_unknown(n, {"family", "knots"}, "hazard");
    const auto knots = require(n, "knots", "hazard");
    if (!knots.IsSequence()) throw ScenarioError("'hazard.knots' must be a list of [d, p] pairs");
    std::vector<Knot> out;
    for (const auto& k : knots) {
      if (!k.IsSequence() || k.size() != 2)
        throw ScenarioError("'hazard.knots' entries must be [d, p] pairs");
      out.push_back({read_number(k[0], "hazard.knots.d"), read_number(k[1], "hazard.knots.p")});
    }
    return HazardCurve::table(std::move(out));
  }
  throw ScenarioError("unknown hazard family '" + family + "' (expected affine, power or table)");
}

inline SignalReachCurve read_reach(const YAML::Node& n) {
  if (!n.IsMap()) throw ScenarioError("'signal_reach' must be a mapping with a 'family' key");
  const auto family = require(n, "family", "signal_reach").as<std::string>();
  if (family == "linear") {
    reject_unknown(n, {"family", "slope"}, "signal_reach");
    return SignalReachCurve::linear(
        read_number(require(n, "slope", "signal_reach"), "signal_reach.slope"));
  }
  if (family == "constant") {
    reject_unknown(n, {"family", "value"}, "signal_reach");
    return SignalReachCurve::constant(
        read_number(require(n, "value", "signal_reach"), "signal_reach.value"));
  }
  throw ScenarioError("unknown signal_reach family '" + family + "' (expected linear or constant)");
}

// Shortest decimal text that reads back as the same double.
inline std::string exact_number(double v) {
  char buf[40];
  for (int prec : {15, 16, 17}) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace detail

/// Parses and validates a scenario. Every beta it names must yield a game
/// that passes validate_game; violations raise ScenarioError naming the
/// broken constraint.
inline Scenario parse_scenario(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ScenarioError(std::string("scenario is not valid YAML: ") + e.what());
  }
  if (!root.IsMap()) throw ScenarioError("scenario must be a YAML mapping");

  Scenario sc;
  try {
    detail::reject_unknown(root, {"hazard", "signal_reach", "y", "r", "beta"}, "scenario");
    sc.hazard = detail::read_hazard(detail::require(root, "hazard", "scenario"));
    sc.signal_reach = detail::read_reach(detail::require(root, "signal_reach", "scenario"));
    sc.y = detail::read_number(detail::require(root, "y", "scenario"), "y");
    sc.r = detail::read_number(detail::require(root, "r", "scenario"), "r");
    const auto beta = detail::require(root, "beta", "scenario");
    if (beta.IsMap()) {
      detail::reject_unknown(beta, {"min", "max", "count"}, "beta");
      BetaSweep s;
      s.min = detail::read_number(detail::require(beta, "min", "beta"), "beta.min");
      s.max = detail::read_number(detail::require(beta, "max", "beta"), "beta.max");
      const double count = detail::read_number(detail::require(beta, "count", "beta"), "beta.count");
      if (count < 2 || count != std::floor(count))
        throw ScenarioError("beta.count must be an integer >= 2");
      s.count = static_cast<std::size_t>(count);
      if (!(s.min <= s.max)) throw ScenarioError("beta sweep must satisfy min <= max");
      sc.beta = s;
    } else {
      sc.beta = detail::read_number(beta, "beta");
    }
  } catch (const YAML::Exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  }

  try {
    for (double b : sc.betas()) validate_game(sc.game_at(b));
  } catch (const Error& e) {
    throw ScenarioError(std::string("invalid scenario: ") + e.what());
  }
  return sc;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

/// Canonical text of a scenario; parse_scenario(format_scenario(s)) == s.
inline std::string format_scenario(const Scenario& sc) {
  using detail::exact_number;
  std::ostringstream os;
  os << "hazard: ";
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Affine>) {
          os << "{family: affine, slope: " << exact_number(f.slope)
             << ", intercept: " << exact_number(f.intercept) << "}";
        } else if constexpr (std::is_same_v<T, Power>) {
          os << "{family: power, exponent: " << exact_number(f.exponent) << "}";
        } else {
          os << "{family: table, knots: [";
          for (std::size_t i = 0; i < f.knots.size(); ++i)
            os << (i ? ", " : "") << "[" << exact_number(f.knots[i].d) << ", "
               << exact_number(f.knots[i].p) << "]";
          os << "]}";
        }
      },
      sc.hazard.family());
  os << "\nsignal_reach: ";
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, LinearReach>) {
          os << "{family: linear, slope: " << exact_number(f.slope) << "}";
        } else {
          os << "{family: constant, value: " << exact_number(f.value) << "}";
        }
      },
      sc.signal_reach.family());
  os << "\ny: " << exact_number(sc.y) << "\nr: " << exact_number(sc.r) << "\nbeta: ";
  if (const double* b = std::get_if<double>(&sc.beta)) {
    os << exact_number(*b);
  } else {
    const auto& s = std::get<BetaSweep>(sc.beta);
    os << "{min: " << exact_number(s.min) << ", max: " << exact_number(s.max)
       << ", count: " << s.count << "}";
  }
  os << "\n";
  return os.str();
}

}  // namespace v2vsig
