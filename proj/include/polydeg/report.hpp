// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "polydeg/discriminant.hpp"
#include "polydeg/polytope.hpp"

namespace polydeg {

// Serializable analysis report.  All big integers and rationals are encoded
// as decimal strings so the JSON form is exact and round-trips:
// report_from_json(to_json(r)) == r.
struct ReportDocument {
  std::string name;
  int ambient_dim = 0;
  std::vector<Point> vertices;
  std::vector<Int> f_vector;
  bool is_simple = false;
  bool is_smooth = false;
  std::vector<std::vector<Rational>> ehrhart_vector;  // entry p: coefficients of E_p
  std::vector<Int> per_dim_volume_sums;
  Int c_volumes;
  Int c_interior;
  bool formulas_agree = false;
  int max_dilation = 0;
  std::vector<std::vector<Int>> interior_counts;  // [p][i-1] = I_p(i)
  bool defective_criterion_fires = false;
  std::map<std::string, std::string> verdicts;

  bool operator==(const ReportDocument&) const = default;
};

// max_dilation 0 means the default n+1.
ReportDocument build_report(const LatticePolytope& p, int max_dilation = 0);

nlohmann::ordered_json to_json(const ReportDocument& r);
ReportDocument report_from_json(const nlohmann::json& j);  // throws ParseError

std::string render_text(const ReportDocument& r);

}  // namespace polydeg
