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

// Convex-hull membership by linear programming and redundancy removal for point sets in the
// probability simplex.

#include <cstddef>
#include <vector>

#include "reseng/thermo.hpp"

namespace reseng {

inline constexpr double kLpTolerance = 1e-9;

struct HullMembership {
  bool inside = false;
  double l1_residual = 0.0;     // min over the hull of the L1 distance to the query point
  std::vector<double> weights;  // convex weights of the closest hull point
};

// Decides whether p is a convex combination of `vertices` up to an L1 slack of `tol`.
HullMembership hull_membership(const std::vector<ProbabilityVector>& vertices,
                               const ProbabilityVector& p, double tol = kLpTolerance);

bool in_hull(const std::vector<ProbabilityVector>& vertices, const ProbabilityVector& p,
             double tol = kLpTolerance);

// Extreme points of the input set: deduplicated, then every point that is a convex combination
// of the others (within tol) is dropped. Output sorted lexicographically.
std::vector<ProbabilityVector> prune_hull(std::vector<ProbabilityVector> points,
                                          double tol = kLpTolerance);

// Hausdorff distance between two finite point sets, Euclidean metric.
double hausdorff_distance(const std::vector<ProbabilityVector>& a,
                          const std::vector<ProbabilityVector>& b);

}  // namespace reseng
