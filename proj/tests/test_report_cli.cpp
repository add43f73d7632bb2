// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polydeg/families.hpp"
#include "polydeg/report.hpp"

using namespace polydeg;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "polydeg_cli_tests";
  fs::create_directories(dir);
  return dir;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = scratch_dir() / ("out_" + std::to_string(counter++) + ".txt");
  std::string cmd = std::string(POLYDEG_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("report round-trips through JSON") {
  for (const LatticePolytope& p :
       {gen_family("cube", {2}), gen_family("prism", {3}), gen_family("segment", {5}), square_pyramid()}) {
    ReportDocument report = build_report(p);
    nlohmann::ordered_json j = to_json(report);
    ReportDocument back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == report);
  }
}

TEST_CASE("report values for the unit square") {
  ReportDocument r = build_report(gen_family("cube", {2}));
  CHECK(r.c_volumes == 2);
  CHECK(r.c_interior == 2);
  CHECK(r.formulas_agree);
  CHECK(r.is_simple);
  CHECK(r.is_smooth);
  CHECK_FALSE(r.defective_criterion_fires);
  CHECK(r.f_vector == std::vector<Int>{Int(4), Int(4), Int(1)});
}

TEST_CASE("cli analyze on families") {
  RunResult segment = run_cli("analyze --family segment:5 --json");
  CHECK(segment.exit_code == 0);
  auto j = nlohmann::json::parse(segment.output);
  CHECK(j["c_volumes"] == "8");
  CHECK(j["c_interior"] == "8");

  RunResult prism = run_cli("analyze --family prism:3 --json");
  CHECK(prism.exit_code == 0);
  auto jp = nlohmann::json::parse(prism.output);
  CHECK(jp["c_volumes"] == "0");
  CHECK(jp["defective_criterion_fires"] == true);

  RunResult text = run_cli("analyze --family cube:2");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("c (volume formula):        2") != std::string::npos);
}

TEST_CASE("cli analyze on files") {
  fs::path square = write_file("square.poly", R"({"name":"unit square","vertices":[[0,0],[1,0],[0,1],[1,1]]})");
  RunResult ok = run_cli("analyze " + square.string() + " --json");
  CHECK(ok.exit_code == 0);
  auto j = nlohmann::json::parse(ok.output);
  CHECK(j["c_volumes"] == "2");
  CHECK(j["name"] == "unit square");

  RunResult missing = run_cli("analyze " + (scratch_dir() / "missing.poly").string());
  CHECK(missing.exit_code == 1);

  fs::path rational = write_file("rational.poly", R"({"vertices":[[0,0],[1,0],[0,1],[1,0.5]]})");
  RunResult bad = run_cli("analyze " + rational.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("vertices[3][1]") != std::string::npos);
  CHECK(bad.output.find("expected integer") != std::string::npos);

  fs::path syntax = write_file("broken.poly", "{\"vertices\": [[0,0],\n [1,0],");
  RunResult syn = run_cli("analyze " + syntax.string());
  CHECK(syn.exit_code == 1);
  CHECK(syn.output.find(":2:") != std::string::npos);  // line 2

  fs::path pyramid = write_file(
      "pyramid.poly", R"({"name":"pyramid","vertices":[[1,1,0],[-1,1,0],[1,-1,0],[-1,-1,0],[0,0,1]]})");
  RunResult hyp = run_cli("analyze " + pyramid.string() + " --require-simple");
  CHECK(hyp.exit_code == 3);
  RunResult formal = run_cli("analyze " + pyramid.string() + " --json");
  CHECK(formal.exit_code == 0);
  auto jf = nlohmann::json::parse(formal.output);
  CHECK(jf["c_volumes"] == "3");
  CHECK(jf["c_interior"] == "2");
  CHECK(jf["formulas_agree"] == false);

  RunResult both = run_cli("analyze " + square.string() + " --family cube:2");
  CHECK(both.exit_code == 1);
  RunResult neither = run_cli("analyze");
  CHECK(neither.exit_code == 1);
}

TEST_CASE("cli ehrhart") {
  RunResult cube = run_cli("ehrhart --family cube:2 --json");
  CHECK(cube.exit_code == 0);
  auto j = nlohmann::json::parse(cube.output);
  CHECK(j["ehrhart_vector"][0] == nlohmann::json::array({"4"}));
  CHECK(j["ehrhart_vector"][1] == nlohmann::json::array({"4", "4"}));
  CHECK(j["ehrhart_vector"][2] == nlohmann::json::array({"1", "2", "1"}));

  RunResult simplex = run_cli("ehrhart --family simplex:2:1");
  CHECK(simplex.exit_code == 0);
  CHECK(simplex.output.find("E_2(t) = 1/2*t^2 + 3/2*t + 1") != std::string::npos);

  RunResult missing = run_cli("ehrhart missing.poly");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("cli verify") {
  RunResult nill = run_cli("verify theorem-nill --seed 7");
  CHECK(nill.exit_code == 0);
  CHECK(nill.output.find("result: PASS") != std::string::npos);

  RunResult bogus = run_cli("verify bogus");
  CHECK(bogus.exit_code == 1);

  RunResult ds = run_cli("verify dehn-sommerville --json");
  CHECK(ds.exit_code == 0);
  auto j = nlohmann::json::parse(ds.output);
  CHECK(j["pass"] == true);
  CHECK(j["suites"][0]["failures"] == 0);
}

TEST_CASE("cli verify output is deterministic") {
  RunResult a = run_cli("verify involution --seed 9 --json");
  RunResult b = run_cli("verify involution --seed 9 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("cli analyze output is deterministic") {
  RunResult a = run_cli("analyze --family product:2,2 --json");
  RunResult b = run_cli("analyze --family product:2,2 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("cli ehrhart honors --max-dilation exactly") {
  RunResult r = run_cli("ehrhart --family cube:2 --max-dilation 2 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["max_dilation"] == 2);
  CHECK(j["interior_counts"][2].size() == 2);
}

TEST_CASE("cli resource guard") {
  fs::path big = write_file("big.poly", R"({"vertices":[[0,0,0,0],[500,0,0,0],[0,500,0,0],[0,0,500,0],[0,0,0,500]]})");
  RunResult guarded = run_cli("analyze " + big.string());
  CHECK(guarded.exit_code == 1);
  CHECK(guarded.output.find("--force") != std::string::npos);
}
