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

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "v2vsig/optimize.hpp"
#include "v2vsig/oracle.hpp"

namespace v2vsig::csv {

inline constexpr std::string_view kEquilibriumHeader = "beta,region,P,S,x_n,x_vu,Q,posterior";
inline constexpr std::string_view kDesignHeader =
    "objective,beta_star,value_at_star,value_at_0,value_at_1,fast_path";
inline constexpr std::string_view kOracleHeader =
    "beta,region,members,closed_form_P,closed_form_mass,max_P_gap,max_mass_gap,closed_form_ok,"
    "verdict";

// 12 significant digits keeps output byte-stable across platforms.
inline std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_row(std::ostream& os, const SweepRecord& r) {
  os << num(r.beta) << ',' << to_string(r.region) << ',' << num(r.P) << ',' << num(r.S) << ','
     << num(r.x_n) << ',' << num(r.x_vu) << ',' << num(r.Q) << ',' << num(r.posterior) << '\n';
}

inline void write_equilibria(std::ostream& os, std::span<const SweepRecord> records) {
  os << kEquilibriumHeader << '\n';
  for (const auto& r : records) write_row(os, r);
}

inline void write_design(std::ostream& os, const DesignResult& d) {
  os << kDesignHeader << '\n'
     << to_string(d.objective) << ',' << num(d.beta_star) << ',' << num(d.value_at_star) << ','
     << num(d.value_at_0) << ',' << num(d.value_at_1) << ',' << (d.fast_path ? "true" : "false")
     << '\n';
}

struct OracleRow {
  double beta = 0.0;
  Region region = Region::NCVC;
  oracle::Agreement agreement;
  bool closed_form_ok = false;
  bool agree = false;
};

inline void write_oracle_header(std::ostream& os) { os << kOracleHeader << '\n'; }

inline void write_oracle_row(std::ostream& os, const OracleRow& r) {
  os << num(r.beta) << ',' << to_string(r.region) << ',' << r.agreement.members << ','
     << num(r.agreement.closed_form_P) << ',' << num(r.agreement.closed_form_mass) << ','
     << num(r.agreement.max_P_gap) << ',' << num(r.agreement.max_mass_gap) << ','
     << (r.closed_form_ok ? "true" : "false") << ',' << (r.agree ? "agree" : "disagree") << '\n';
}

}  // namespace v2vsig::csv
