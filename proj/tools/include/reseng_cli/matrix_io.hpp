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

// Plain-text complex matrices: one row per line, entries such as 0.5, -0.5i, 0.25+0.1i.

#include <complex>
#include <string>
#include <string_view>

#include "reseng/unitary.hpp"

namespace reseng::cli {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::complex<double> parse_complex(std::string_view token);
CMatrix parse_matrix(std::string_view text);
CMatrix read_matrix_file(const std::string& path);

std::string format_complex(std::complex<double> z);
std::string format_matrix(const CMatrix& m);

}  // namespace reseng::cli
