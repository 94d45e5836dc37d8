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

#pragma once

// Subcommand drivers. Each returns the report, timings and any auxiliary files; writing is
// left to the caller.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace reseng::cli {

inline constexpr const char* kToolName = "reseng";
inline constexpr const char* kToolVersion = "0.1.0";

// Invalid configuration: exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that parses but fails numeric validation: exit code 3.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_strokes;
  std::optional<double> tol;
  std::filesystem::path base_dir = ".";  // relative matrix paths resolve here
};

struct RunResult {
  nlohmann::json report;
  nlohmann::json timings;
  std::map<std::string, std::string> files;  // file name -> contents
};

RunResult run_athermality(nlohmann::json config, const Overrides& o);
RunResult run_coherence(nlohmann::json config, const Overrides& o);
RunResult run_qubit_synth(nlohmann::json config, const Overrides& o);
RunResult run_mutual(nlohmann::json config, const Overrides& o);
RunResult run_fig4(const std::vector<std::size_t>& dims, std::size_t points);

// Dispatch on config["mode"].
RunResult run_config(nlohmann::json config, const Overrides& o);

// Finite values as numbers, infinities as "inf" / "-inf".
nlohmann::json number(double v);

}  // namespace reseng::cli
