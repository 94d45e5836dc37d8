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


#include "reseng/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "reseng/errors.hpp"

namespace reseng {

EnergyLevels::EnergyLevels(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw DimensionError("energy levels need d >= 2");
  for (double e : values_) {
    if (!std::isfinite(e)) throw DomainError("energy levels must be finite");
  }
  if (!std::is_sorted(values_.begin(), values_.end())) {
    throw DomainError("energy levels must be sorted non-decreasing");
  }
}

EnergyLevels EnergyLevels::ladder(std::size_t d) {
  std::vector<double> e(d);
  for (std::size_t k = 0; k < d; ++k) e[k] = static_cast<double>(k + 1);
  return EnergyLevels(std::move(e));
}

InverseTemperature::InverseTemperature(double beta) : beta_(beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw DomainError("inverse temperature must be finite and non-negative");
  }
}

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DimensionError("probability vector is empty");
  double sum = 0.0;
  for (double& v : probs_) {
    if (!std::isfinite(v)) throw DomainError("probability entry is not finite");
    if (v < 0.0) {
      if (v < -tol::kNegative) throw DomainError("negative probability entry");
      v = 0.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol::kSum) throw DomainError("probabilities do not sum to one");
  for (double& v : probs_) v /= sum;
}

ProbabilityVector ProbabilityVector::from_weights(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("weights must be finite and non-negative");
    sum += w;
  }
  if (!(sum > 0.0)) throw DomainError("weights sum to zero");
  for (double& w : weights) w /= sum;
  return ProbabilityVector(std::move(weights));
}

ProbabilityVector ProbabilityVector::uniform(std::size_t d) {
  return ProbabilityVector(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

ProbabilityVector ProbabilityVector::basis(std::size_t d, std::size_t k) {
  if (k >= d) throw DimensionError("basis index out of range");
  std::vector<double> v(d, 0.0);
  v[k] = 1.0;
  return ProbabilityVector(std::move(v));
}

double max_abs_diff(const ProbabilityVector& a, const ProbabilityVector& b) {
  if (a.size() != b.size()) throw DimensionError("dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double total_variation(const ProbabilityVector& a, const ProbabilityVector& b) {
  if (a.size() != b.size()) throw DimensionError("dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
  return 0.5 * s;
}

bool lex_less(const ProbabilityVector& a, const ProbabilityVector& b) {
  return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(),
                                      b.values().end());
}

ThermoCurve::ThermoCurve(std::vector<CurvePoint> elbows) : elbows_(std::move(elbows)) {
  if (elbows_.size() < 2) throw DimensionError("curve needs at least two elbows");
  if (elbows_.front().x != 0.0 || elbows_.front().y != 0.0 || elbows_.back().x != 1.0 ||
      elbows_.back().y != 1.0) {
    throw DomainError("curve must run from (0,0) to (1,1)");
  }
}

ProbabilityVector gibbs_state(const EnergyLevels& levels, InverseTemperature beta) {
  const std::size_t d = levels.size();
  if (beta.value() == 0.0) return ProbabilityVector::uniform(d);
  const double e0 = levels[0];
  std::vector<double> w(d);
  for (std::size_t k = 0; k < d; ++k) w[k] = std::exp(-beta.value() * (levels[k] - e0));
  return ProbabilityVector::from_weights(std::move(w));
}

namespace {

void check_pair(const ProbabilityVector& p, const ProbabilityVector& g) {
  if (p.size() != g.size()) throw DimensionError("state and Gibbs vector differ in dimension");
  for (double gi : g.values()) {
    if (!(gi > 0.0)) throw DomainError("degenerate Gibbs weight");
  }
}

}  // namespace

BetaOrder beta_order(const ProbabilityVector& p, const ProbabilityVector& g) {
  check_pair(p, g);
  BetaOrder order;
  order.perm.resize(p.size());
  std::iota(order.perm.begin(), order.perm.end(), std::size_t{0});
  // Compare p_a/g_a > p_b/g_b without division.
  std::stable_sort(order.perm.begin(), order.perm.end(), [&](std::size_t a, std::size_t b) {
    return p[a] * g[b] > p[b] * g[a];
  });
  return order;
}

ThermoCurve thermo_curve(const ProbabilityVector& p, const ProbabilityVector& g) {
  const BetaOrder order = beta_order(p, g);
  const std::size_t d = p.size();
  std::vector<CurvePoint> elbows(d + 1);
  double x = 0.0;
  double y = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    x += g[order.perm[j]];
    y += p[order.perm[j]];
    elbows[j + 1] = {std::min(x, 1.0), std::min(y, 1.0)};
  }
  elbows[d] = {1.0, 1.0};
  return ThermoCurve(std::move(elbows));
}

namespace {

double curve_value_clamped(const std::vector<CurvePoint>& e, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  auto it = std::lower_bound(e.begin(), e.end(), x,
                             [](const CurvePoint& pt, double v) { return pt.x < v; });
  if (it == e.begin()) return e.front().y;
  if (it == e.end()) return 1.0;
  if (it->x == x) return it->y;
  const CurvePoint& hi = *it;
  const CurvePoint& lo = *(it - 1);
  const double dx = hi.x - lo.x;
  if (dx <= 0.0) return hi.y;
  const double t = (x - lo.x) / dx;
  return std::clamp(lo.y + t * (hi.y - lo.y), 0.0, 1.0);
}

}  // namespace

double curve_value(const ThermoCurve& curve, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("curve abscissa outside [0,1]");
  return curve_value_clamped(curve.elbows(), x);
}

double thermomajorisation_margin(const ProbabilityVector& p, const ProbabilityVector& q,
                                 const ProbabilityVector& g) {
  if (p.size() != q.size()) throw DimensionError("dimension mismatch");
  const ThermoCurve cp = thermo_curve(p, g);
  const ThermoCurve cq = thermo_curve(q, g);
  double margin = std::numeric_limits<double>::infinity();
  for (const CurvePoint& pt : cq.elbows()) {
    margin = std::min(margin, curve_value_clamped(cp.elbows(), pt.x) - pt.y);
  }
  return margin;
}

bool thermomajorises(const ProbabilityVector& p, const ProbabilityVector& q,
                     const ProbabilityVector& g) {
  return thermomajorisation_margin(p, q, g) >= -tol::kCurve;
}

namespace {

// Sorted lexicographically, then a point is a duplicate if some kept point with a first
// coordinate within tol agrees in max-norm.
std::vector<ProbabilityVector> dedup_sorted(std::vector<ProbabilityVector> pts, double tol) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<ProbabilityVector> kept;
  kept.reserve(pts.size());
  for (auto& p : pts) {
    bool dup = false;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      if (p[0] - (*it)[0] > tol) break;
      if (max_abs_diff(p, *it) <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(p));
  }
  return kept;
}

}  // namespace

std::vector<ProbabilityVector> dedup_points(std::vector<ProbabilityVector> pts, double tol) {
  return dedup_sorted(std::move(pts), tol);
}

std::vector<ProbabilityVector> extremal_achievable(const ProbabilityVector& p,
                                                   const ProbabilityVector& g) {
  const ThermoCurve curve = thermo_curve(p, g);
  const auto& e = curve.elbows();
  const std::size_t d = p.size();
  std::vector<std::size_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::vector<ProbabilityVector> out;
  std::vector<double> q(d);
  do {
    double x = 0.0;
    double prev = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      x += g[sigma[j]];
      const double cur = (j + 1 == d) ? 1.0 : curve_value_clamped(e, x);
      q[sigma[j]] = std::max(cur - prev, 0.0);
      prev = cur;
    }
    out.push_back(ProbabilityVector::from_weights(q));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return dedup_sorted(std::move(out), tol::kDuplicate);
}

ProbabilityVector thermalise_subset(const ProbabilityVector& p, const ProbabilityVector& g,
                                    std::span<const std::size_t> subset) {
  check_pair(p, g);
  std::vector<bool> in(p.size(), false);
  for (std::size_t i : subset) {
    if (i >= p.size()) throw DimensionError("subset index out of range");
    in[i] = true;
  }
  double ps = 0.0;
  double gs = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (in[i]) {
      ps += p[i];
      gs += g[i];
    }
  }
  std::vector<double> out(p.vec());
  if (std::none_of(in.begin(), in.end(), [](bool b) { return b; })) return p;
  if (!(gs > 0.0)) throw DomainError("empty Gibbs weight on subset");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (in[i]) out[i] = ps * g[i] / gs;
  }
  return ProbabilityVector::from_weights(std::move(out));
}

ProbabilityVector two_level_transfer(const ProbabilityVector& p, const ProbabilityVector& g,
                                     std::size_t i, std::size_t j, double amount) {
  check_pair(p, g);
  const std::size_t d = p.size();
  if (i >= d) throw PreconditionError("i", "index out of range");
  if (j >= d) throw PreconditionError("j", "index out of range");
  if (i == j) throw PreconditionError("j", "must differ from i");
  if (p[i] != 0.0) throw PreconditionError("p_i", "level i must be empty");
  if (!(p[j] > 0.0)) throw PreconditionError("p_j", "level j must be occupied");
  if (!(amount >= 0.0 && amount <= p[j])) throw PreconditionError("a", "must lie in [0, p_j]");
  if (g[i] < g[j] * (1.0 - 1e-12)) throw PreconditionError("E_i", "requires E_i <= E_j");
  // Columns of the two-level Gibbs-stochastic matrix acting on (p_i, p_j) = (0, p_j).
  const double r = p[j];
  const double t_ij = amount / r;
  const double t_jj = 1.0 - t_ij;
  std::vector<double> out(p.vec());
  out[i] = t_ij * r;
  out[j] = t_jj * r;
  return ProbabilityVector::from_weights(std::move(out));
}

ProbabilityVector bar_state(const ProbabilityVector& p) {
  const std::size_t d = p.size();
  std::vector<double> out(d, 0.0);
  out[d - 1] = p[d - 1];
  out[d - 2] = 1.0 - p[d - 1];
  return ProbabilityVector::from_weights(std::move(out));
}

}  // namespace reseng
