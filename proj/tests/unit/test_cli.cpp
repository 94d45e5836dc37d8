// Copyright 2026 The reseng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "reseng_cli/matrix_io.hpp"
#include "reseng_cli/runners.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace reseng;
using namespace reseng::cli;

const fs::path kData = RESENG_DATA_DIR;

json load(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Overrides from(const fs::path& config) {
  Overrides o;
  o.base_dir = config.parent_path();
  return o;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("reseng_cli_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RESENG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(MatrixIo, ParseComplexForms) {
  EXPECT_EQ(parse_complex("1.5-2i"), std::complex<double>(1.5, -2));
  EXPECT_EQ(parse_complex("-i"), std::complex<double>(0, -1));
  EXPECT_EQ(parse_complex("0.25j"), std::complex<double>(0, 0.25));
  EXPECT_EQ(parse_complex("-3"), std::complex<double>(-3, 0));
  EXPECT_EQ(parse_complex("1e-3+2e-2i"), std::complex<double>(1e-3, 2e-2));
  EXPECT_THROW(parse_complex("abc"), ParseError);
  EXPECT_THROW(parse_complex(""), ParseError);
}

TEST(MatrixIo, ParseMatrixRejectsNonSquare) {
  EXPECT_THROW(parse_matrix("1 0\n0 1 0\n"), ParseError);
  EXPECT_THROW(parse_matrix("# only a comment\n"), ParseError);
  const CMatrix m = parse_matrix("# header\n1, 0\n0, -1+0i\n");
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m(1, 1), std::complex<double>(-1, 0));
}

TEST(MatrixIo, FormatRoundTrip) {
  const CMatrix u = read_matrix_file((kData / "u6_h2.txt").string());
  EXPECT_EQ(parse_matrix(format_matrix(u)), u);
  CMatrix r(2, 2);
  r << std::complex<double>(0.1, -1.0 / 3), std::complex<double>(M_PI, 1e-300), std::complex<double>(-0.0, 2),
      std::complex<double>(1e10, -7);
  EXPECT_EQ(parse_matrix(format_matrix(r)), r);
}

TEST(Runners, Fig2a) {
  const fs::path cfg = kData / "configs" / "fig2a.json";
  const auto r = run_config(load(cfg), from(cfg));
  const auto& res = r.report["results"];
  EXPECT_TRUE(res["upper_bound_holds"].get<bool>());
  for (bool b : res["polytope"]["literal"]["inside_hull"]) EXPECT_TRUE(b);
  EXPECT_EQ(res["polytope"]["literal"]["vertices"].size(), 4U);
  ASSERT_TRUE(r.files.count("vertices.csv"));
  ASSERT_TRUE(r.files.count("simplex.svg"));
  EXPECT_EQ(r.files.at("vertices.csv").rfind("stroke,p1,p2,p3\n", 0), 0U);
  EXPECT_NE(r.files.at("simplex.svg").find("<svg"), std::string::npos);
}

TEST(Runners, QubitReportsTildeStates) {
  const fs::path cfg = kData / "configs" / "qubit_engine.json";
  const auto r = run_config(load(cfg), from(cfg));
  const auto& t = r.report["results"]["tilde_states"];
  EXPECT_NEAR(t["gamma_tilde"][0].get<double>(), 0.9, 1e-14);
  EXPECT_NEAR(t["Gamma_tilde"][0].get<double>(), 0.4, 1e-14);
  EXPECT_FALSE(r.files.count("simplex.svg"));
}

TEST(Runners, ZeroStrokesGivesStartState) {
  const fs::path cfg = kData / "configs" / "fig2a.json";
  Overrides o = from(cfg);
  o.max_strokes = 0;
  const auto r = run_config(load(cfg), o);
  const auto& res = r.report["results"];
  EXPECT_EQ(res["strokes_run"].get<int>(), 0);
  ASSERT_EQ(res["final_vertices"].size(), 1U);
  const std::string csv = r.files.at("vertices.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(Runners, SixBySixCoherence) {
  const fs::path cfg = kData / "configs" / "u6_h2.json";
  const auto r = run_config(load(cfg), from(cfg));
  const auto& res = r.report["results"];
  EXPECT_TRUE(res["h2"]["satisfied"].get<bool>());
  EXPECT_EQ(res["h2"]["minimal_M"].get<int>(), 2);
}

TEST(Runners, FourierGenerator) {
  const fs::path cfg = kData / "configs" / "fourier5.json";
  const auto r = run_config(load(cfg), from(cfg));
  const auto& res = r.report["results"];
  const double c = res["c_U"].get<double>();
  EXPECT_GT(c, 0.0);
  EXPECT_LT(c, 1.0);
  EXPECT_NEAR(res["stroke_lower_bound"].get<double>(), 2 * std::log(4.0) / std::log(3 * c + 1), 1e-12);
}

TEST(Runners, IdentityEverythingBlocked) {
  const fs::path cfg = kData / "configs" / "identity3.json";
  const auto r = run_config(load(cfg), from(cfg));
  const auto& res = r.report["results"];
  EXPECT_FALSE(res["h2"]["satisfied"].get<bool>());
  EXPECT_EQ(res["stroke_lower_bound"], "inf");
  EXPECT_TRUE(res["blockers"]["corollary_blocker"].get<bool>());
  EXPECT_TRUE(res["blockers"]["proximity_blocker"]["blocked"].get<bool>());
  EXPECT_FALSE(res["blockers"]["necessary_conditions"]["holds"].get<bool>());
}

TEST(Runners, Fig4Sweep) {
  const auto r = run_fig4({3, 5}, 20);
  const std::string csv = r.files.at("fig4.csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "d,alpha,c_U,bound");
  double prev = INFINITY;
  int prev_d = 0;
  double last = 0;
  while (std::getline(in, line)) {
    int d;
    double a, c, b;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &d, &a, &c, &b), 4) << line;
    if (d != prev_d) prev = INFINITY, prev_d = d;
    EXPECT_LE(b, prev * (1 + 1e-12));
    prev = b;
    last = b;
    if (d == 3 && a == 1.0) EXPECT_NEAR(b, 2.0, 1e-12);
  }
  EXPECT_NEAR(last, 2.0, 1e-12);
  EXPECT_EQ(run_fig4({3, 5}, 20).files.at("fig4.csv"), csv);
}

TEST(Runners, ConfigErrors) {
  EXPECT_THROW(run_config(json{{"mode", "nope"}}, {}), ConfigError);
  EXPECT_THROW(run_config(json{{"mode", "athermality"}, {"energies", {1, 2}}, {"alpha", 1}, {"beta", 0.5}, {"bogus", 1}}, {}),
               ConfigError);
  EXPECT_THROW(run_config(json{{"mode", "coherence"}, {"matrix", {{"rows", {"1 1", "0 1"}}}}}, {}),
               ValidationError);
}

TEST(Report, ReparsesAndEchoesConfig) {
  for (const char* name : {"fig2a.json", "u6_h2.json", "qubit_synth.json", "mutual_u6.json", "identity3.json"}) {
    const fs::path cfg = kData / "configs" / name;
    const json input = load(cfg);
    const auto r = run_config(input, from(cfg));
    const json back = json::parse(r.report.dump(2));
    EXPECT_EQ(back, r.report) << name;
    for (const auto& [k, v] : input.items()) EXPECT_EQ(back["config"][k], v) << name << " key " << k;
    EXPECT_TRUE(back["config"].contains("seed")) << name;
  }
}

TEST(Cli, ExitCodes) {
  const fs::path out = scratch("exit");
  EXPECT_EQ(run_cli("athermality --config " + (kData / "configs" / "qubit_engine.json").string() + " --out " + out.string()), 0);
  EXPECT_EQ(run_cli("athermality --config " + (out / "missing.json").string() + " --out " + out.string()), 2);
  EXPECT_EQ(run_cli("bogus-subcommand"), 2);
  {
    std::ofstream bad(out / "bad.json");
    bad << "{ not json";
  }
  EXPECT_EQ(run_cli("coherence --config " + (out / "bad.json").string() + " --out " + out.string()), 2);
  {
    std::ofstream nu(out / "nonunitary.json");
    nu << R"({"mode": "coherence", "matrix": {"rows": ["1 1", "0 1"]}})";
  }
  EXPECT_EQ(run_cli("coherence --config " + (out / "nonunitary.json").string() + " --out " + out.string()), 3);
}

TEST(Cli, ByteIdenticalReruns) {
  for (const auto& [sub, name] : {std::pair{"athermality", "fig2a.json"}, std::pair{"coherence", "u6_h2.json"},
                                  std::pair{"qubit-synth", "qubit_synth.json"}, std::pair{"mutual-search", "mutual_u6.json"}}) {
    const fs::path a = scratch(std::string(name) + ".a");
    const fs::path b = scratch(std::string(name) + ".b");
    const std::string cfg = (kData / "configs" / name).string();
    ASSERT_EQ(run_cli(std::string(sub) + " --config " + cfg + " --seed 5 --out " + a.string()), 0);
    ASSERT_EQ(run_cli(std::string(sub) + " --config " + cfg + " --seed 5 --out " + b.string()), 0);
    for (const auto& e : fs::directory_iterator(a)) {
      if (e.path().filename() == "timings.json") continue;
      EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << name << " " << e.path().filename();
    }
    EXPECT_EQ(load(a / "report.json")["seed"].get<std::uint64_t>(), 5U);
  }
}

}  // namespace
