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

// Ternary (d = 3) projection of probability vectors to a static SVG plot.

#include <string>
#include <vector>

#include "reseng/thermo.hpp"

namespace reseng::cli {

struct SimplexPlot {
  std::vector<ProbabilityVector> reachable;  // hull vertices
  std::vector<ProbabilityVector> polytope;   // inner polytope vertices
  double band_threshold = 1.0;               // shade p3 > band_threshold
  std::vector<ProbabilityVector> markers;    // extra labelled points (Gibbs states)
};

std::string simplex_svg(const SimplexPlot& plot);

}  // namespace reseng::cli
