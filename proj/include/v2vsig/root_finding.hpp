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

#pragma once

#include <cmath>
#include <concepts>

namespace v2vsig::root {

struct Result {
  double x = 0.0;
  double residual = 0.0;  // |f(x)|
  int iterations = 0;
  bool converged = false;
};

/// Bisection for a weakly increasing f on [lo, hi].
///
/// Stops once |f(mid)| <= ftol or the bracket can no longer be split in
/// double precision. If f has no sign change on [lo, hi] the endpoint with
/// the smaller |f| is returned with converged = (residual <= ftol).
template <std::invocable<double> F>
Result bisect_increasing(F&& f, double lo, double hi, double ftol = 1e-12,
                         int max_iter = 200) {
  double f_lo = f(lo);
  if (std::abs(f_lo) <= ftol) return {lo, std::abs(f_lo), 0, true};
  double f_hi = f(hi);
  if (std::abs(f_hi) <= ftol) return {hi, std::abs(f_hi), 0, true};
  if (f_lo > 0.0 || f_hi < 0.0) {
    const bool take_lo = std::abs(f_lo) <= std::abs(f_hi);
    return {take_lo ? lo : hi, std::abs(take_lo ? f_lo : f_hi), 0, false};
  }

  Result best{lo, std::abs(f_lo), 0, false};
  if (std::abs(f_hi) < best.residual) best = {hi, std::abs(f_hi), 0, false};
  for (int it = 1; it <= max_iter; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    const double f_mid = f(mid);
    if (std::abs(f_mid) < best.residual) best = {mid, std::abs(f_mid), it, false};
    best.iterations = it;
    if (std::abs(f_mid) <= ftol) {
      best.converged = true;
      return best;
    }
    if (mid <= lo || mid >= hi) break;  // bracket exhausted
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  best.converged = best.residual <= ftol;
  return best;
}

struct Minimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Golden-section minimisation of f on [lo, hi] down to an interval of
/// width xtol. Returns the abscissa of the smallest value seen.
template <std::invocable<double> F>
Minimum golden_section_minimize(F&& f, double lo, double hi, double xtol = 1e-6,
                               int max_iter = 200) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (b - a > xtol && it < max_iter) {
    ++it;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? Minimum{c, fc, it, b - a <= xtol}
                  : Minimum{d, fd, it, b - a <= xtol};
}

}  // namespace v2vsig::root
