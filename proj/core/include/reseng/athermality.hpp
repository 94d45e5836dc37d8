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

// Two-bath athermality engine: reachable-set simulation and the analytic bounds around it.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "reseng/hull.hpp"
#include "reseng/thermo.hpp"

namespace reseng {

enum class Bath { cold, hot };

// Cold Gibbs state gamma (inverse temperature alpha) and hot Gibbs state Gamma (beta <= alpha).
class EngineParams {
 public:
  static EngineParams from_temperatures(const EnergyLevels& levels, InverseTemperature alpha,
                                        InverseTemperature beta);
  // Both vectors strictly positive and non-increasing; gamma_1 >= Gamma_1.
  static EngineParams from_gibbs(ProbabilityVector gamma, ProbabilityVector Gamma);

  std::size_t dim() const noexcept { return gamma_.size(); }
  const ProbabilityVector& gamma() const noexcept { return gamma_; }
  const ProbabilityVector& Gamma() const noexcept { return Gamma_; }
  const ProbabilityVector& gibbs(Bath b) const noexcept { return b == Bath::cold ? gamma_ : Gamma_; }
  const std::optional<EnergyLevels>& levels() const noexcept { return levels_; }
  std::optional<double> alpha() const noexcept { return alpha_; }
  std::optional<double> beta() const noexcept { return beta_; }
  // Equal baths (alpha == beta or fully degenerate levels).
  bool degenerate() const noexcept;

 private:
  EngineParams(ProbabilityVector gamma, ProbabilityVector Gamma)
      : gamma_(std::move(gamma)), Gamma_(std::move(Gamma)) {}

  ProbabilityVector gamma_;
  ProbabilityVector Gamma_;
  std::optional<EnergyLevels> levels_;
  std::optional<double> alpha_;
  std::optional<double> beta_;
};

struct StartState {
  enum class Kind { from_gamma, from_Gamma, custom };
  Kind kind = Kind::from_gamma;
  std::optional<ProbabilityVector> state;  // custom only
  Bath first_bath = Bath::cold;            // custom only

  static StartState gamma() { return {Kind::from_gamma, std::nullopt, Bath::cold}; }
  static StartState Gamma() { return {Kind::from_Gamma, std::nullopt, Bath::hot}; }
  static StartState custom(ProbabilityVector p, Bath first) { return {Kind::custom, std::move(p), first}; }
};

struct ReachableSet {
  std::vector<ProbabilityVector> vertices;
  std::size_t stroke_index = 0;
  bool converged = false;
  double hausdorff_delta = 0.0;  // distance to the previous vertex set (0 for stroke 0)
};

struct SimulateOptions {
  std::size_t max_strokes = 40;
  double conv_tol = 1e-8;
  double prune_tol = kLpTolerance;
  // Optional early exit, evaluated after every stroke.
  std::function<bool(const ReachableSet&)> stop;
};

// Element N holds the vertices after N strokes; element 0 is the starting state. Stroke N uses
// the start's first bath when N is odd and the other bath otherwise. Starting from gamma
// (resp. Gamma) the first stroke prepares it with the cold (resp. hot) bath.
std::vector<ReachableSet> simulate(const EngineParams& params, const StartState& start,
                                   const SimulateOptions& options);
std::vector<ReachableSet> simulate(const EngineParams& params, const StartState& start,
                                   std::size_t max_strokes, double conv_tol = 1e-8);

// Vertices after applying one stroke with bath g to every vertex of `current`.
std::vector<ProbabilityVector> expand_stroke(const std::vector<ProbabilityVector>& current,
                                             const ProbabilityVector& g,
                                             double prune_tol = kLpTolerance);

double monotone_M(const ProbabilityVector& p, const EngineParams& params);

// Every vertex satisfies q_d <= Gamma_d / Gamma_{d-1} + tol::kCurve.
bool check_upper_bound(const ReachableSet& set, const EngineParams& params);
double upper_bound_qd(const EngineParams& params);

struct TildeStates {
  ProbabilityVector gamma_tilde;
  ProbabilityVector Gamma_tilde;
};

TildeStates tilde_states(const EngineParams& params);

enum class PolytopeVariant {
  literal,      // g_k built from the full Gibbs vectors
  renormalised  // g_k built from the Gibbs vectors restricted to levels 1..k and renormalised
};

// 2^{d-1} vertices indexed by bit strings b_2..b_d (bit k-2 of the index is b_k).
std::vector<ProbabilityVector> lower_bound_polytope(
    const EngineParams& params, PolytopeVariant variant = PolytopeVariant::literal);

enum class GroundStateVerdict { yes_by_criterion, criterion_inconclusive };

GroundStateVerdict ground_state_reachable(const EngineParams& params);

enum class Lemma3Side { raise_pd, raise_q1 };

// One cold+hot (raise_pd) or hot+cold (raise_q1) round pushing x towards Gamma~ (resp. gamma~).
ProbabilityVector lemma3_step(const ProbabilityVector& x, const EngineParams& params,
                              Lemma3Side side);
double lemma3_ratio(const EngineParams& params);

// One hot+cold round of the ground-state construction; requires the ground-state criterion and
// p_k / gamma_k non-increasing.
ProbabilityVector appendixD_iteration(const ProbabilityVector& p, const EngineParams& params);

// Qubit engines. Extreme map of one stroke with bath g.
ProbabilityVector qubit_extremal_map(const ProbabilityVector& p, const ProbabilityVector& g);
// Per-round contraction (1-gamma_1)(1-Gamma_1) / (gamma_1 Gamma_1).
double qubit_contraction(const EngineParams& params);

struct QubitReach {
  enum class Kind { free_segment, resource_Gamma, resource_gamma, finite };
  Kind kind = Kind::finite;
  ProbabilityVector upper;  // endpoint with the larger ground-state population
  ProbabilityVector lower;
};

// States reachable from p with at most N further strokes (nullopt: arbitrarily many), allowing
// either bath to act first.
QubitReach qubit_reachable_set(const ProbabilityVector& p, const EngineParams& params,
                               std::optional<std::size_t> N);

}  // namespace reseng
