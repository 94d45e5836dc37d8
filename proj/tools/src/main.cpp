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


#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "reseng/errors.hpp"
#include "reseng_cli/runners.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace reseng::cli;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonFlags {
  std::string config;
  std::uint64_t seed = 0;
  std::string out = ".";
  std::size_t max_strokes = 0;
  double tol = 0.0;
};

void add_common(CLI::App* sub, CommonFlags& f, bool needs_config) {
  auto* c = sub->add_option("--config", f.config, "JSON configuration file");
  if (needs_config) c->required();
  sub->add_option("--seed", f.seed, "random seed (overrides the config)");
  sub->add_option("--out", f.out, "output directory")->capture_default_str();
  sub->add_option("--max-strokes", f.max_strokes, "stroke budget (overrides the config)");
  sub->add_option("--tol", f.tol, "tolerance (overrides the config)");
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
}

void write_file(const fs::path& p, const std::string& contents) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
  f << contents;
}

void write_outputs(const RunResult& r, const fs::path& dir) {
  fs::create_directories(dir);
  write_file(dir / "report.json", r.report.dump(2) + "\n");
  write_file(dir / "timings.json", r.timings.dump(2) + "\n");
  for (const auto& [name, contents] : r.files) write_file(dir / name, contents);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource engines: athermality and coherence engine simulations"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  struct Mode {
    const char* command;
    const char* mode;
    const char* help;
  };
  const std::vector<Mode> modes{{"athermality", "athermality", "two-bath reachable-set simulation"},
                                {"coherence", "coherence", "structure, bounds and witnesses for a unitary"},
                                {"qubit-synth", "qubit_synth", "two-axis qubit stroke plans"},
                                {"mutual-search", "mutual", "mutually coherent states and flat columns"}};
  std::vector<CommonFlags> flags(modes.size());
  std::vector<CLI::App*> subs;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    subs.push_back(app.add_subcommand(modes[k].command, modes[k].help));
    add_common(subs.back(), flags[k], true);
  }
  CommonFlags fig4_flags;
  std::vector<std::size_t> dims{3, 5, 10};
  std::size_t points = 100;
  CLI::App* fig4 = app.add_subcommand("fig4", "stroke lower bound along the fractional Fourier family");
  add_common(fig4, fig4_flags, false);
  fig4->add_option("--dims", dims, "dimensions")->delimiter(',')->capture_default_str();
  fig4->add_option("--points", points, "grid points alpha = k / points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    RunResult result;
    fs::path out_dir;
    if (fig4->parsed()) {
      out_dir = fig4_flags.out;
      result = run_fig4(dims, points);
    } else {
      std::size_t k = 0;
      while (!subs[k]->parsed()) ++k;
      CLI::App* sub = subs[k];
      const CommonFlags& f = flags[k];
      out_dir = f.out;
      json cfg = load_config(f.config);
      if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
      if (!cfg.contains("mode")) cfg["mode"] = modes[k].mode;
      if (cfg["mode"] != modes[k].mode) {
        throw ConfigError(std::string("config mode does not match subcommand '") + modes[k].command + "'");
      }
      Overrides o;
      o.base_dir = fs::path(f.config).parent_path();
      if (o.base_dir.empty()) o.base_dir = ".";
      if (sub->count("--seed")) o.seed = f.seed;
      if (sub->count("--max-strokes")) o.max_strokes = f.max_strokes;
      if (sub->count("--tol")) o.tol = f.tol;
      result = run_config(std::move(cfg), o);
    }
    write_outputs(result, out_dir);
    std::cout << (out_dir / "report.json").string() << "\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const reseng::Error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
