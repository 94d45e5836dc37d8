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


#include "reseng/athermality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "reseng/errors.hpp"

namespace reseng {

namespace {

constexpr double kDenominatorFloor = 1e-14;
constexpr double kRangeTol = 1e-12;

void require_strictly_positive_non_increasing(const ProbabilityVector& g, const char* name) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!(g[k] > 0.0)) throw DomainError(std::string(name) + ": degenerate Gibbs weight");
    if (k > 0 && g[k] > g[k - 1] * (1.0 + 1e-12)) {
      throw DomainError(std::string(name) + ": Gibbs vector must be non-increasing");
    }
  }
}

void require_dim(const ProbabilityVector& p, const EngineParams& params) {
  if (p.size() != params.dim()) throw DimensionError("state dimension does not match engine");
}

double tilde_denominator(const EngineParams& params) {
  const auto& g = params.gamma();
  const auto& G = params.Gamma();
  const std::size_t d = params.dim();
  if (params.degenerate()) throw DegenerateEngineError("equal bath temperatures");
  const double den = G[0] * (1.0 - g[d - 1]) - G[d - 1] * (1.0 - g[0]);
  if (!(std::abs(den) > kDenominatorFloor)) throw DegenerateEngineError("vanishing denominator");
  return den;
}

}  // namespace

EngineParams EngineParams::from_temperatures(const EnergyLevels& levels, InverseTemperature alpha,
                                             InverseTemperature beta) {
  if (beta.value() > alpha.value()) {
    throw PreconditionError("beta", "hot inverse temperature must not exceed alpha");
  }
  EngineParams p(gibbs_state(levels, alpha), gibbs_state(levels, beta));
  p.levels_ = levels;
  p.alpha_ = alpha.value();
  p.beta_ = beta.value();
  return p;
}

EngineParams EngineParams::from_gibbs(ProbabilityVector gamma, ProbabilityVector Gamma) {
  if (gamma.size() != Gamma.size()) throw DimensionError("Gibbs vectors differ in dimension");
  if (gamma.size() < 2) throw DimensionError("engine needs d >= 2");
  require_strictly_positive_non_increasing(gamma, "gamma");
  require_strictly_positive_non_increasing(Gamma, "Gamma");
  if (Gamma[0] > gamma[0] + 1e-15) {
    throw PreconditionError("Gamma", "hot Gibbs state must not be colder than gamma");
  }
  return EngineParams(std::move(gamma), std::move(Gamma));
}

bool EngineParams::degenerate() const noexcept {
  if (alpha_ && beta_ && *alpha_ == *beta_) return true;
  return max_abs_diff(gamma_, Gamma_) <= 1e-15;
}

std::vector<ProbabilityVector> expand_stroke(const std::vector<ProbabilityVector>& current,
                                             const ProbabilityVector& g, double prune_tol) {
  std::vector<ProbabilityVector> candidates;
  for (const auto& v : current) {
    auto ext = extremal_achievable(v, g);
    candidates.insert(candidates.end(), std::make_move_iterator(ext.begin()),
                      std::make_move_iterator(ext.end()));
  }
  return prune_hull(std::move(candidates), prune_tol);
}

std::vector<ReachableSet> simulate(const EngineParams& params, const StartState& start,
                                   const SimulateOptions& options) {
  if (options.max_strokes < 1) throw PreconditionError("max_strokes", "must be at least 1");
  if (!(options.conv_tol >= 0.0)) throw PreconditionError("conv_tol", "must be non-negative");
  ProbabilityVector p0 = params.gamma();
  Bath first = Bath::cold;
  switch (start.kind) {
    case StartState::Kind::from_gamma:
      break;
    case StartState::Kind::from_Gamma:
      p0 = params.Gamma();
      first = Bath::hot;
      break;
    case StartState::Kind::custom:
      if (!start.state) throw PreconditionError("start", "custom start needs a state");
      require_dim(*start.state, params);
      p0 = *start.state;
      first = start.first_bath;
      break;
  }
  const Bath second = first == Bath::cold ? Bath::hot : Bath::cold;

  std::vector<ReachableSet> out;
  out.push_back(ReachableSet{{p0}, 0, false, 0.0});
  std::size_t quiet = 0;
  for (std::size_t n = 1; n <= options.max_strokes; ++n) {
    const Bath bath = (n % 2 == 1) ? first : second;
    const auto& prev = out.back().vertices;
    ReachableSet next;
    next.vertices = expand_stroke(prev, params.gibbs(bath), options.prune_tol);
    next.stroke_index = n;
    next.hausdorff_delta = hausdorff_distance(prev, next.vertices);
    quiet = next.hausdorff_delta < options.conv_tol ? quiet + 1 : 0;
    next.converged = quiet >= 2;
    out.push_back(std::move(next));
    if (out.back().converged) break;
    if (options.stop && options.stop(out.back())) break;
  }
  return out;
}

std::vector<ReachableSet> simulate(const EngineParams& params, const StartState& start,
                                   std::size_t max_strokes, double conv_tol) {
  SimulateOptions opts;
  opts.max_strokes = max_strokes;
  opts.conv_tol = conv_tol;
  return simulate(params, start, opts);
}

double upper_bound_qd(const EngineParams& params) {
  const std::size_t d = params.dim();
  return params.Gamma()[d - 1] / params.Gamma()[d - 2];
}

double monotone_M(const ProbabilityVector& p, const EngineParams& params) {
  require_dim(p, params);
  return std::max(p[p.size() - 1], upper_bound_qd(params));
}

bool check_upper_bound(const ReachableSet& set, const EngineParams& params) {
  const double bound = upper_bound_qd(params) + tol::kCurve;
  const std::size_t d = params.dim();
  return std::all_of(set.vertices.begin(), set.vertices.end(), [&](const ProbabilityVector& q) {
    if (q.size() != d) throw DimensionError("vertex dimension does not match engine");
    return q[d - 1] <= bound;
  });
}

TildeStates tilde_states(const EngineParams& params) {
  const auto& g = params.gamma();
  const auto& G = params.Gamma();
  const std::size_t d = params.dim();
  const double den = tilde_denominator(params);
  const double gt1 = G[0] * (g[0] - g[d - 1]) / den;
  const double Gtd = G[d - 1] * (g[0] - g[d - 1]) / den;
  std::vector<double> gt(d);
  std::vector<double> Gt(d);
  gt[0] = gt1;
  for (std::size_t k = 1; k < d; ++k) gt[k] = (1.0 - gt1) / (1.0 - g[0]) * g[k];
  Gt[d - 1] = Gtd;
  for (std::size_t k = 0; k + 1 < d; ++k) Gt[k] = (1.0 - Gtd) / (1.0 - G[d - 1]) * G[k];
  for (double& v : gt) v = std::max(v, 0.0);
  for (double& v : Gt) v = std::max(v, 0.0);
  return {ProbabilityVector::from_weights(std::move(gt)),
          ProbabilityVector::from_weights(std::move(Gt))};
}

std::vector<ProbabilityVector> lower_bound_polytope(const EngineParams& params,
                                                    PolytopeVariant variant) {
  const std::size_t d = params.dim();
  if (params.degenerate()) throw DegenerateEngineError("equal bath temperatures");
  std::vector<double> g0(d, 0.0);
  std::vector<double> g1(d, 0.0);
  double sg = 0.0;
  double sG = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    sg += params.gamma()[k];
    sG += params.Gamma()[k];
    if (k == 0) continue;
    const double s = variant == PolytopeVariant::renormalised ? sg : 1.0;
    const double S = variant == PolytopeVariant::renormalised ? sG : 1.0;
    const double ga1 = params.gamma()[0] / s;
    const double gak = params.gamma()[k] / s;
    const double Ga1 = params.Gamma()[0] / S;
    const double Gak = params.Gamma()[k] / S;
    const double den = Ga1 * (1.0 - gak) - Gak * (1.0 - ga1);
    if (!(std::abs(den) > kDenominatorFloor)) throw DegenerateEngineError("vanishing denominator");
    g0[k] = gak * (Ga1 - Gak) / den;
    g1[k] = Gak * (ga1 - gak) / den;
  }
  std::vector<ProbabilityVector> out;
  const std::size_t count = std::size_t{1} << (d - 1);
  out.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    std::vector<double> f(d, 0.0);
    double tail = 0.0;
    for (std::size_t k = d - 1; k >= 1; --k) {
      const bool b = (bits >> (k - 1)) & 1U;
      f[k] = (1.0 - tail) * (b ? g1[k] : g0[k]);
      tail += f[k];
    }
    f[0] = 1.0 - tail;
    for (double& v : f) {
      if (v < 0.0 && v > -tol::kNegative) v = 0.0;
    }
    out.push_back(ProbabilityVector::from_weights(std::move(f)));
  }
  return out;
}

GroundStateVerdict ground_state_reachable(const EngineParams& params) {
  const auto& g = params.gamma();
  const auto& G = params.Gamma();
  const std::size_t d = params.dim();
  const bool yes = g[0] > 0.5 && G[0] < G[d - 1] + G[d - 2];
  return yes ? GroundStateVerdict::yes_by_criterion : GroundStateVerdict::criterion_inconclusive;
}

double lemma3_ratio(const EngineParams& params) {
  const auto& g = params.gamma();
  const auto& G = params.Gamma();
  const std::size_t d = params.dim();
  return (1.0 - g[0]) * G[d - 1] / ((1.0 - g[d - 1]) * G[0]);
}

ProbabilityVector lemma3_step(const ProbabilityVector& x, const EngineParams& params,
                              Lemma3Side side) {
  require_dim(x, params);
  const auto& g = params.gamma();
  const auto& G = params.Gamma();
  const std::size_t d = params.dim();
  const TildeStates t = tilde_states(params);
  const double ratio = lemma3_ratio(params);
  std::vector<double> out(d);
  if (side == Lemma3Side::raise_pd) {
    const double xd = x[d - 1];
    if (xd < G[d - 1] - kRangeTol) throw PreconditionError("x_d", "below Gamma_d");
    if (xd > t.Gamma_tilde[d - 1] + kRangeTol) throw PreconditionError("x_d", "above Gamma~_d");
    const double pd = ratio * xd + (g[0] - g[d - 1]) * G[d - 1] / ((1.0 - g[d - 1]) * G[0]);
    out[d - 1] = pd;
    for (std::size_t k = 0; k + 1 < d; ++k) out[k] = (1.0 - pd) / (1.0 - G[d - 1]) * G[k];
  } else {
    const double x1 = x[0];
    if (x1 < g[0] - kRangeTol) throw PreconditionError("x_1", "below gamma_1");
    if (x1 > t.gamma_tilde[0] + kRangeTol) throw PreconditionError("x_1", "above gamma~_1");
    const double q1 = ratio * x1 + (g[0] - g[d - 1]) / (1.0 - g[d - 1]);
    out[0] = q1;
    for (std::size_t k = 1; k < d; ++k) out[k] = (1.0 - q1) / (1.0 - g[0]) * g[k];
  }
  for (double& v : out) v = std::max(v, 0.0);
  return ProbabilityVector::from_weights(std::move(out));
}

ProbabilityVector appendixD_iteration(const ProbabilityVector& p, const EngineParams& params) {
  require_dim(p, params);
  if (ground_state_reachable(params) != GroundStateVerdict::yes_by_criterion) {
    throw PreconditionError("params", "ground-state criterion does not hold");
  }
  const auto& g = params.gamma();
  const auto& G = params.Gamma();
  const std::size_t d = params.dim();
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (p[k + 1] * g[k] > p[k] * g[k + 1] + 1e-12) {
      throw PreconditionError("p", "p_k / gamma_k must be non-increasing");
    }
  }
  const double q1 = p[d - 1] + (G[0] - G[d - 1]) / G[d - 2] * p[d - 2];
  std::vector<double> r(d);
  r[0] = 1.0 - (1.0 - g[0]) / g[0] * q1;
  for (std::size_t k = 1; k < d; ++k) r[k] = g[k] / g[0] * q1;
  for (double& v : r) v = std::max(v, 0.0);
  return ProbabilityVector::from_weights(std::move(r));
}

ProbabilityVector qubit_extremal_map(const ProbabilityVector& p, const ProbabilityVector& g) {
  if (p.size() != 2 || g.size() != 2) throw DimensionError("qubit map needs d = 2");
  const double g1 = g[0];
  const double q1 = (1.0 - (1.0 - g1) / g1) * p[0] + p[1];
  return ProbabilityVector::from_weights({std::clamp(q1, 0.0, 1.0), std::clamp(1.0 - q1, 0.0, 1.0)});
}

double qubit_contraction(const EngineParams& params) {
  if (params.dim() != 2) throw DimensionError("qubit contraction needs d = 2");
  const double g = params.gamma()[0];
  const double G = params.Gamma()[0];
  return (1.0 - g) * (1.0 - G) / (g * G);
}

QubitReach qubit_reachable_set(const ProbabilityVector& p, const EngineParams& params,
                               std::optional<std::size_t> N) {
  if (p.size() != 2 || params.dim() != 2) throw DimensionError("qubit reachable set needs d = 2");
  QubitReach out{QubitReach::Kind::finite, p, p};
  auto order = [&]() {
    if (out.upper[0] < out.lower[0]) std::swap(out.upper, out.lower);
  };
  if (params.degenerate()) {
    out.lower = qubit_extremal_map(p, params.gamma());
    out.kind = N ? QubitReach::Kind::finite : QubitReach::Kind::resource_gamma;
    if (N && *N == 0) out.lower = p;
    order();
    return out;
  }
  const TildeStates t = tilde_states(params);
  const double gt = t.gamma_tilde[0];
  const double Gt = t.Gamma_tilde[0];
  if (!N) {
    if (p[0] <= gt + kRangeTol && p[0] >= Gt - kRangeTol) {
      out.kind = QubitReach::Kind::free_segment;
      out.upper = t.gamma_tilde;
      out.lower = t.Gamma_tilde;
    } else if (total_variation(p, t.gamma_tilde) < total_variation(p, t.Gamma_tilde)) {
      out.kind = QubitReach::Kind::resource_Gamma;
      out.lower = qubit_extremal_map(p, params.Gamma());
    } else {
      out.kind = QubitReach::Kind::resource_gamma;
      out.lower = qubit_extremal_map(p, params.gamma());
    }
    order();
    return out;
  }
  // Alternating words of length <= N: Pi_X (Pi_Y Pi_X)^m p and (Pi_Y Pi_X)^m p, closed form in m.
  const double rho = qubit_contraction(params);
  double lo = p[0];
  double hi = p[0];
  const std::size_t n = *N;
  for (int first = 0; first < 2; ++first) {
    const ProbabilityVector& gx = first == 0 ? params.Gamma() : params.gamma();
    const double fixed = first == 0 ? gt : Gt;
    double rho_m = 1.0;
    for (std::size_t m = 0; 2 * m <= n; ++m) {
      const double c = rho_m * (p[0] - fixed) + fixed;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      if (2 * m + 1 <= n) {
        const double c1 = std::clamp(c, 0.0, 1.0);
        const double e = qubit_extremal_map(ProbabilityVector::from_weights({c1, 1.0 - c1}), gx)[0];
        lo = std::min(lo, e);
        hi = std::max(hi, e);
      }
      rho_m *= rho;
    }
  }
  lo = std::clamp(lo, 0.0, 1.0);
  hi = std::clamp(hi, 0.0, 1.0);
  out.upper = ProbabilityVector::from_weights({hi, 1.0 - hi});
  out.lower = ProbabilityVector::from_weights({lo, 1.0 - lo});
  return out;
}

}  // namespace reseng
