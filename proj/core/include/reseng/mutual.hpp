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

// Maximally mutually coherent states and their generation in three strokes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "reseng/unitary.hpp"

namespace reseng {

inline constexpr double kFlatTol = 1e-8;

struct NecessaryConditions {
  bool holds = false;
  std::size_t best_l = 0;
  double value = 0.0;   // max_l min_m (sum_j |u_jm u_jl| / 2 - max_i |u_im u_il|)
  double margin = 0.0;  // value + 1 / (2 sqrt d)
};

NecessaryConditions necessary_conditions(const UnitaryMatrix& U);
// min_m (...) for a single column l.
double necessary_value(const UnitaryMatrix& U, std::size_t l);

// min_i max_j |u_ij|^2 > sqrt((1 + 1/sqrt d) / 2).
bool corollary_blocker(const UnitaryMatrix& U);

struct ProximityBlocker {
  bool blocked = false;
  double distance_sq = 0.0;  // min over D, Pi of ||U - D Pi||_HS^2 = 2d - 2 sum_k max_j |u_kj|
  double threshold = 0.0;    // 2 - 2 sqrt((1 + 1/sqrt d) / 2)
};

ProximityBlocker permutation_proximity_blocker(const UnitaryMatrix& U);

// Alice starts: columns of U^dagger D U. Bob starts: columns of U D U^dagger.
enum class FlatConvention { alice_first, bob_first };

struct FlatColumnSolution {
  std::size_t column_index = 0;
  FlatConvention convention = FlatConvention::alice_first;
  DiagonalUnitary phases{std::vector<double>{0.0}};
  CVector column;       // the flat column itself
  double residual = 0;  // max_m | |column_m| - 1/sqrt d |
};

struct FlatSearchOptions {
  int restarts = 0;  // per column and convention; 0 means 8 d
  std::uint64_t seed = 0;
  double tol_flat = kFlatTol;
  bool both_conventions = true;
};

struct FlatSearchOutcome {
  std::optional<FlatColumnSolution> solution;
  std::string reason;         // empty on success
  double best_residual = 0.0;  // smallest residual seen
  int local_searches = 0;
};

FlatSearchOutcome search_flat_column(const UnitaryMatrix& U, const FlatSearchOptions& options);
FlatSearchOutcome search_flat_column(const UnitaryMatrix& U, int budget, std::uint64_t seed,
                                     double tol_flat = kFlatTol);

// |<j|psi>| and |<j|U psi>| equal 1/sqrt d within tol for every j.
bool verify_mutually_coherent(const UnitaryMatrix& U, const CVector& psi, double tol);

struct CoherentStateSearch {
  std::optional<CVector> state;
  double residual = 0.0;  // max_j | |(U psi)_j| - 1/sqrt d | for the best flat-modulus psi
  int local_searches = 0;
};

// Random-restart search over flat-modulus states for one that is also flat after U.
CoherentStateSearch search_mutually_coherent_state(const UnitaryMatrix& U, int restarts,
                                                   std::uint64_t seed, double tol = kFlatTol);

struct ThreeStrokeConstruction {
  FlatColumnSolution flat;
  DiagonalUnitary completion{std::vector<double>{0.0}};  // third-stroke diagonal
  CVector state;                                           // final state
  bool verified = false;
};

// Third stroke mapping the flat column onto the mutually coherent target psi_star.
ThreeStrokeConstruction complete_three_stroke(const UnitaryMatrix& U,
                                              const FlatColumnSolution& flat,
                                              const CVector& psi_star, double tol);

}  // namespace reseng
