// SPDX-License-Identifier: Apache-2.0
#include "polydeg/report.hpp"

#include <sstream>

#include "polydeg/ehrhart.hpp"
#include "polydeg/polynomial.hpp"

namespace polydeg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json int_list(const std::vector<Int>& values) {
  ordered_json arr = ordered_json::array();
  for (const Int& v : values) arr.push_back(to_string(v));
  return arr;
}

std::vector<Int> int_list_from(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Int> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw ParseError(where + ": expected string-encoded integers");
    out.push_back(int_from_string(item.get<std::string>()));
  }
  return out;
}

const json& field(const json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field \"" + key + "\"");
  return *it;
}

}  // namespace

ReportDocument build_report(const LatticePolytope& p, int max_dilation) {
  ReportDocument r;
  r.name = p.name();
  r.ambient_dim = p.ambient_dim();
  r.vertices = p.vertices();
  r.f_vector = p.face_lattice().f_vector;

  DegreeReport degree = analyze_degree(p, max_dilation);
  r.is_simple = degree.is_simple;
  r.is_smooth = degree.is_smooth;
  r.per_dim_volume_sums = degree.per_dim_volume_sums;
  r.c_volumes = degree.c_volumes;
  r.c_interior = degree.c_interior;
  r.formulas_agree = degree.c_volumes == degree.c_interior;
  r.max_dilation = degree.interior_table.max_dilation;
  r.interior_counts = degree.interior_table.counts;
  r.defective_criterion_fires = degree.defective_criterion_fires;

  EhrhartVector e = ehrhart_vector(p);
  for (const Polynomial& entry : e.entries) r.ehrhart_vector.push_back(entry.coeffs());

  r.verdicts["reciprocity"] = "ok";
  r.verdicts["formula_agreement"] =
      r.is_simple ? "ok" : (r.formulas_agree ? "agrees (not claimed: not simple)" : "differs (not claimed: not simple)");
  r.verdicts["defectivity"] = !r.is_simple          ? "not applicable (not simple)"
                              : r.defective_criterion_fires ? "fires (c = 0 verified)"
                                                            : "does not fire";
  return r;
}

nlohmann::ordered_json to_json(const ReportDocument& r) {
  ordered_json j;
  j["name"] = r.name;
  j["ambient_dim"] = r.ambient_dim;
  ordered_json verts = ordered_json::array();
  for (const Point& v : r.vertices) verts.push_back(int_list(v));
  j["vertices"] = verts;
  j["f_vector"] = int_list(r.f_vector);
  j["is_simple"] = r.is_simple;
  j["is_smooth"] = r.is_smooth;
  ordered_json ehr = ordered_json::array();
  for (const auto& coeffs : r.ehrhart_vector) {
    ordered_json entry = ordered_json::array();
    for (const Rational& c : coeffs) entry.push_back(to_string(c));
    ehr.push_back(entry);
  }
  j["ehrhart_vector"] = ehr;
  j["per_dim_volume_sums"] = int_list(r.per_dim_volume_sums);
  j["c_volumes"] = to_string(r.c_volumes);
  j["c_interior"] = to_string(r.c_interior);
  j["formulas_agree"] = r.formulas_agree;
  j["max_dilation"] = r.max_dilation;
  ordered_json table = ordered_json::array();
  for (const auto& row : r.interior_counts) table.push_back(int_list(row));
  j["interior_counts"] = table;
  j["defective_criterion_fires"] = r.defective_criterion_fires;
  ordered_json verdicts;
  for (const auto& [key, value] : r.verdicts) verdicts[key] = value;
  j["verdicts"] = verdicts;
  return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
  ReportDocument r;
  try {
    r.name = field(j, "name").get<std::string>();
    r.ambient_dim = field(j, "ambient_dim").get<int>();
    for (const auto& v : field(j, "vertices")) r.vertices.push_back(int_list_from(v, "vertices"));
    r.f_vector = int_list_from(field(j, "f_vector"), "f_vector");
    r.is_simple = field(j, "is_simple").get<bool>();
    r.is_smooth = field(j, "is_smooth").get<bool>();
    for (const auto& entry : field(j, "ehrhart_vector")) {
      std::vector<Rational> coeffs;
      for (const auto& c : entry) coeffs.push_back(rational_from_string(c.get<std::string>()));
      r.ehrhart_vector.push_back(std::move(coeffs));
    }
    r.per_dim_volume_sums = int_list_from(field(j, "per_dim_volume_sums"), "per_dim_volume_sums");
    r.c_volumes = int_from_string(field(j, "c_volumes").get<std::string>());
    r.c_interior = int_from_string(field(j, "c_interior").get<std::string>());
    r.formulas_agree = field(j, "formulas_agree").get<bool>();
    r.max_dilation = field(j, "max_dilation").get<int>();
    for (const auto& row : field(j, "interior_counts")) r.interior_counts.push_back(int_list_from(row, "interior_counts"));
    r.defective_criterion_fires = field(j, "defective_criterion_fires").get<bool>();
    for (const auto& [key, value] : field(j, "verdicts").items()) r.verdicts[key] = value.get<std::string>();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed report document: ") + e.what());
  }
  return r;
}

std::string render_text(const ReportDocument& r) {
  std::ostringstream out;
  out << "polytope: " << (r.name.empty() ? "(unnamed)" : r.name) << "  (dim " << r.ambient_dim << ", "
      << r.vertices.size() << " vertices)\n";
  out << "f-vector: [";
  for (size_t i = 0; i < r.f_vector.size(); ++i) out << (i ? ", " : "") << r.f_vector[i];
  out << "]\n";
  out << "simple: " << (r.is_simple ? "yes" : "no") << "   smooth: " << (r.is_smooth ? "yes" : "no") << "\n";
  out << "ehrhart vector:\n";
  for (size_t p = 0; p < r.ehrhart_vector.size(); ++p)
    out << "  E_" << p << "(t) = " << Polynomial(r.ehrhart_vector[p]).to_string() << "\n";
  out << "per-dim volume sums: [";
  for (size_t i = 0; i < r.per_dim_volume_sums.size(); ++i) out << (i ? ", " : "") << r.per_dim_volume_sums[i];
  out << "]\n";
  out << "interior counts I_p(i), i = 1.." << r.max_dilation << ":\n";
  for (size_t p = 0; p < r.interior_counts.size(); ++p) {
    out << "  p=" << p << ":";
    for (const Int& v : r.interior_counts[p]) out << " " << v;
    out << "\n";
  }
  out << "c (volume formula):        " << r.c_volumes << "\n";
  out << "c (interior-point formula" << (r.is_simple ? ")" : ", formal)") << ": " << r.c_interior << "\n";
  out << "dual-defectivity criterion: "
      << (!r.is_simple ? "not applicable" : (r.defective_criterion_fires ? "fires (c = 0)" : "does not fire")) << "\n";
  for (const auto& [key, value] : r.verdicts) out << "verdict " << key << ": " << value << "\n";
  return out.str();
}

}  // namespace polydeg
