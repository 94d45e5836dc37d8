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

// Thermomajorisation primitives for energy-incoherent states.

#include <cstddef>
#include <span>
#include <vector>

namespace reseng {

namespace tol {
inline constexpr double kNegative = 1e-12;  // entries down to -kNegative are clamped to 0
inline constexpr double kSum = 1e-12;       // normalisation slack before renormalising
inline constexpr double kCurve = 1e-10;     // thermomajorisation curve comparison
inline constexpr double kDuplicate = 1e-10; // vertex deduplication (max-norm)
inline constexpr double kCoincident = 1e-14; // exact-duplicate merge before hull pruning
inline constexpr double kSlope = 1e-9;      // concavity check on curve slopes
}  // namespace tol

// Energies E_1 <= ... <= E_d, d >= 2.
class EnergyLevels {
 public:
  explicit EnergyLevels(std::vector<double> values);

  // E_k = k for k = 1..d.
  static EnergyLevels ladder(std::size_t d);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

// beta >= 0; beta == 0 is infinite temperature.
class InverseTemperature {
 public:
  explicit InverseTemperature(double beta);
  double value() const noexcept { return beta_; }

 private:
  double beta_;
};

// Occupations of d energy levels. Construction clamps entries in [-kNegative, 0) to zero and
// renormalises when the sum is within kSum of one; anything else is rejected.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs);

  // Normalises arbitrary non-negative weights with a positive sum.
  static ProbabilityVector from_weights(std::vector<double> weights);
  static ProbabilityVector uniform(std::size_t d);
  static ProbabilityVector basis(std::size_t d, std::size_t k);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t k) const { return probs_[k]; }
  std::span<const double> values() const noexcept { return probs_; }
  const std::vector<double>& vec() const noexcept { return probs_; }

  bool operator==(const ProbabilityVector&) const = default;

 private:
  std::vector<double> probs_;
};

double max_abs_diff(const ProbabilityVector& a, const ProbabilityVector& b);
double total_variation(const ProbabilityVector& a, const ProbabilityVector& b);
bool lex_less(const ProbabilityVector& a, const ProbabilityVector& b);

// Permutation of level indices (0-based) sorting p_i / g_i non-increasingly.
struct BetaOrder {
  std::vector<std::size_t> perm;
};

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

// Piecewise-linear concave curve through d+1 elbows, from (0,0) to (1,1).
class ThermoCurve {
 public:
  explicit ThermoCurve(std::vector<CurvePoint> elbows);
  const std::vector<CurvePoint>& elbows() const noexcept { return elbows_; }

 private:
  std::vector<CurvePoint> elbows_;
};

ProbabilityVector gibbs_state(const EnergyLevels& levels, InverseTemperature beta);

BetaOrder beta_order(const ProbabilityVector& p, const ProbabilityVector& g);

ThermoCurve thermo_curve(const ProbabilityVector& p, const ProbabilityVector& g);

// Linear interpolation of the curve at x in [0,1]; throws DomainError otherwise.
double curve_value(const ThermoCurve& curve, double x);

// p thermomajorises q relative to g: the curve of p is nowhere below the curve of q
// (checked at q's elbows, within tol::kCurve).
bool thermomajorises(const ProbabilityVector& p, const ProbabilityVector& q,
                     const ProbabilityVector& g);

// Signed margin min_j [L_p(x_j) - y_j] over q's elbows. Non-negative (up to kCurve) iff p > q.
double thermomajorisation_margin(const ProbabilityVector& p, const ProbabilityVector& q,
                                 const ProbabilityVector& g);

// Extreme points of {q : p thermomajorises q}, one candidate per permutation of the levels,
// deduplicated and sorted lexicographically.
std::vector<ProbabilityVector> extremal_achievable(const ProbabilityVector& p,
                                                   const ProbabilityVector& g);

// Thermalises the levels in `subset` (0-based) towards g, keeping their total population.
ProbabilityVector thermalise_subset(const ProbabilityVector& p, const ProbabilityVector& g,
                                    std::span<const std::size_t> subset);

// Two-level Gibbs-preserving move: empty level i (E_i <= E_j) receives `amount` from level j.
ProbabilityVector two_level_transfer(const ProbabilityVector& p, const ProbabilityVector& g,
                                     std::size_t i, std::size_t j, double amount);

// Sorts lexicographically and drops points within `tol` (max-norm) of an earlier one.
std::vector<ProbabilityVector> dedup_points(std::vector<ProbabilityVector> pts, double tol);

// (0,...,0, 1-p_d, p_d).
ProbabilityVector bar_state(const ProbabilityVector& p);

}  // namespace reseng
