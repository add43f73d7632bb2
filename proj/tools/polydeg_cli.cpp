// SPDX-License-Identifier: Apache-2.0
//
// polydeg: exact discriminant-degree computations for lattice polytopes.
//
// Exit codes: 0 success, 1 usage/parse error, 2 internal cross-check failure
// (including failing verification suites), 3 hypothesis violation.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "polydeg/discriminant.hpp"
#include "polydeg/ehrhart.hpp"
#include "polydeg/errors.hpp"
#include "polydeg/families.hpp"
#include "polydeg/polytope.hpp"
#include "polydeg/report.hpp"
#include "polydeg/verify.hpp"

namespace {

using polydeg::Int;
using polydeg::ParseError;

constexpr long long kScanGuard = 100000000;  // boxes above 1e8 points need --force

std::pair<int, int> line_column(const std::string& text, size_t byte) {
  int line = 1, column = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

polydeg::LatticePolytope load_polytope_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(path + ": expected a JSON object with \"vertices\"");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError(path + ": \"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError(path + ": missing \"vertices\" array");

  std::vector<polydeg::Point> points;
  size_t i = 0;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array()) throw ParseError(path + ": vertices[" + std::to_string(i) + "]: expected an array");
    polydeg::Point point;
    size_t j = 0;
    for (const auto& coord : row) {
      if (!coord.is_number_integer())
        throw ParseError(path + ": vertices[" + std::to_string(i) + "][" + std::to_string(j) +
                         "]: expected integer, got " + coord.dump());
      if (coord.is_number_unsigned() && coord.get<unsigned long long>() > static_cast<unsigned long long>(
                                                                              std::numeric_limits<long long>::max()))
        throw ParseError(path + ": vertices[" + std::to_string(i) + "][" + std::to_string(j) +
                         "]: coordinate exceeds the supported range");
      point.push_back(Int(coord.get<long long>()));
      ++j;
    }
    points.push_back(std::move(point));
    ++i;
  }
  try {
    return polydeg::build_polytope(std::move(points), std::move(name));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

struct InputOptions {
  std::string path;
  std::string family;
  bool json = false;
  bool require_simple = false;
  bool force = false;
  int max_dilation = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("input", opt.path, "polytope file (JSON with \"name\" and \"vertices\")");
  cmd->add_option("--family", opt.family, "generate a named family, e.g. cube:3, simplex:2:3, product:2,2");
  cmd->add_flag("--json", opt.json, "machine-readable output");
  cmd->add_flag("--require-simple", opt.require_simple, "exit 3 unless the polytope is simple");
  cmd->add_flag("--force", opt.force, "disable the lattice-point scan resource guard");
  cmd->add_option("--max-dilation", opt.max_dilation, "interior-count table depth (default: dim + 1)");
}

polydeg::LatticePolytope load_input(const InputOptions& opt) {
  if (opt.path.empty() == opt.family.empty())
    throw ParseError("provide exactly one of: input file, --family");
  if (!opt.family.empty()) {
    try {
      return polydeg::gen_family_spec(opt.family);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return load_polytope_file(opt.path);
}

void enforce_guards(const polydeg::LatticePolytope& p, const InputOptions& opt, int effective_dilation) {
  if (opt.require_simple && !polydeg::is_simple(p))
    throw polydeg::HypothesisError("polytope not simple (--require-simple)");
  if (!opt.force && polydeg::max_scan_points(p, effective_dilation) > kScanGuard)
    throw ParseError("bounding box exceeds " + std::to_string(kScanGuard) +
                     " scan points; rerun with --force to proceed");
}

int cmd_analyze(const InputOptions& opt) {
  const polydeg::LatticePolytope p = load_input(opt);
  // analyze always evaluates the interior-point formula, which needs the
  // table through dilation n+1 regardless of --max-dilation.
  enforce_guards(p, opt, std::max(opt.max_dilation, polydeg::default_max_dilation(p)));
  const polydeg::ReportDocument report = polydeg::build_report(p, opt.max_dilation);
  if (opt.json)
    std::cout << polydeg::to_json(report).dump(2) << "\n";
  else
    std::cout << polydeg::render_text(report);
  return 0;
}

int cmd_ehrhart(const InputOptions& opt) {
  const polydeg::LatticePolytope p = load_input(opt);
  const int dilation = opt.max_dilation > 0 ? opt.max_dilation : polydeg::default_max_dilation(p);
  enforce_guards(p, opt, dilation);
  const polydeg::EhrhartVector e = polydeg::ehrhart_vector(p);
  const polydeg::InteriorCountTable table = polydeg::interior_counts(p, dilation);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["name"] = p.name();
    j["ambient_dim"] = p.ambient_dim();
    nlohmann::ordered_json ehr = nlohmann::ordered_json::array();
    for (const auto& entry : e.entries) {
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (const auto& c : entry.coeffs()) coeffs.push_back(polydeg::to_string(c));
      ehr.push_back(coeffs);
    }
    j["ehrhart_vector"] = ehr;
    j["max_dilation"] = table.max_dilation;
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (const auto& row : table.counts) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& v : row) r.push_back(polydeg::to_string(v));
      counts.push_back(r);
    }
    j["interior_counts"] = counts;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "polytope: " << (p.name().empty() ? "(unnamed)" : p.name()) << "\n";
    for (size_t dim = 0; dim < e.entries.size(); ++dim)
      std::cout << "E_" << dim << "(t) = " << e.entries[dim].to_string() << "\n";
    std::cout << "interior counts I_p(i), i = 1.." << table.max_dilation << ":\n";
    for (size_t dim = 0; dim < table.counts.size(); ++dim) {
      std::cout << "  p=" << dim << ":";
      for (const Int& v : table.counts[dim]) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed, bool json) {
  std::vector<polydeg::SuiteResult> results;
  try {
    results = polydeg::run_suites(suite, seed);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const bool pass = polydeg::all_passed(results);
  if (json) {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json s;
      s["name"] = r.name;
      s["checks"] = r.checks;
      s["failures"] = r.failures;
      s["failure_notes"] = r.failure_notes;
      suites.push_back(s);
    }
    j["suites"] = suites;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "seed: " << seed << "\n";
    for (const auto& r : results) {
      std::cout << "suite " << r.name << ": " << r.checks << " checks, " << r.failures << " failures\n";
      for (const auto& note : r.failure_notes) std::cout << "  ! " << note << "\n";
    }
    std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degree of the toric discriminant of a lattice polytope, two ways"};
  app.require_subcommand(1);

  InputOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand("analyze", "full degree report for a polytope");
  add_input_options(analyze, analyze_opt);

  InputOptions ehrhart_opt;
  CLI::App* ehrhart = app.add_subcommand("ehrhart", "Ehrhart vector and interior-count table");
  add_input_options(ehrhart, ehrhart_opt);

  std::string suite;
  uint64_t seed = 1;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "run the identity verification suites");
  verify->add_option("suite", suite, "suite name or \"all\"")->required();
  verify->add_option("--seed", seed, "random seed (default 1)");
  verify->add_flag("--json", verify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(analyze_opt);
    if (app.got_subcommand(ehrhart)) return cmd_ehrhart(ehrhart_opt);
    if (app.got_subcommand(verify)) return cmd_verify(suite, seed, verify_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const polydeg::HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const polydeg::ConsistencyError& e) {
    std::cerr << "internal cross-check failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
