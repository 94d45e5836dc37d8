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


#include "reseng/mutual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "reseng/coherence.hpp"
#include "reseng/errors.hpp"
#include "reseng/optimize.hpp"

namespace reseng {

namespace {

constexpr double kConditionTol = 1e-12;

double blocker_delta(std::size_t d) {
  return std::sqrt((1.0 + 1.0 / std::sqrt(static_cast<double>(d))) / 2.0);
}

CMatrix convention_matrix(const UnitaryMatrix& U, FlatConvention c) {
  return c == FlatConvention::alice_first ? U.matrix() : CMatrix(U.matrix().adjoint());
}

// Entry (j, m) = conj(v_jm) v_jl, so column_m = sum_j e^{i xi_j} w(j, m).
CMatrix column_weights(const CMatrix& v, Eigen::Index l) {
  CMatrix w(v.rows(), v.cols());
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    for (Eigen::Index m = 0; m < v.cols(); ++m) w(j, m) = std::conj(v(j, m)) * v(j, l);
  }
  return w;
}

CVector phase_vector(const std::vector<double>& free_phases) {
  CVector e(static_cast<Eigen::Index>(free_phases.size() + 1));
  e(0) = 1.0;
  for (std::size_t k = 0; k < free_phases.size(); ++k) {
    e(static_cast<Eigen::Index>(k + 1)) = std::polar(1.0, free_phases[k]);
  }
  return e;
}

double flat_residual(const CVector& v) {
  const double target = 1.0 / std::sqrt(static_cast<double>(v.size()));
  double worst = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) worst = std::max(worst, std::abs(std::abs(v(k)) - target));
  return worst;
}

double flat_objective(const CVector& v) {
  const double target = 1.0 / std::sqrt(static_cast<double>(v.size()));
  double s = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double r = std::abs(v(k)) - target;
    s += r * r;
  }
  return s;
}

std::vector<double> random_phases(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::vector<double> x(n);
  for (double& t : x) t = u(rng);
  return x;
}

double necessary_value_of(const CMatrix& u, Eigen::Index l) {
  double worst = std::numeric_limits<double>::infinity();
  for (Eigen::Index m = 0; m < u.cols(); ++m) {
    double sum = 0.0;
    double mx = 0.0;
    for (Eigen::Index j = 0; j < u.rows(); ++j) {
      const double a = std::abs(u(j, m)) * std::abs(u(j, l));
      sum += a;
      mx = std::max(mx, a);
    }
    worst = std::min(worst, 0.5 * sum - mx);
  }
  return worst;
}

}  // namespace

double necessary_value(const UnitaryMatrix& U, std::size_t l) {
  if (l >= U.dim()) throw DimensionError("column index out of range");
  return necessary_value_of(U.matrix(), static_cast<Eigen::Index>(l));
}

NecessaryConditions necessary_conditions(const UnitaryMatrix& U) {
  const std::size_t d = U.dim();
  NecessaryConditions out;
  out.value = -std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < d; ++l) {
    const double v = necessary_value(U, l);
    if (v > out.value) {
      out.value = v;
      out.best_l = l;
    }
  }
  out.margin = out.value + 1.0 / (2.0 * std::sqrt(static_cast<double>(d)));
  out.holds = out.margin >= -kConditionTol;
  return out;
}

bool corollary_blocker(const UnitaryMatrix& U) {
  const RMatrix x = amplitude_matrix(U);
  const double min_max = x.cwiseAbs2().rowwise().maxCoeff().minCoeff();
  return min_max > blocker_delta(U.dim());
}

ProximityBlocker permutation_proximity_blocker(const UnitaryMatrix& U) {
  const std::size_t d = U.dim();
  const RMatrix x = amplitude_matrix(U);
  ProximityBlocker out;
  out.distance_sq = std::max(0.0, 2.0 * static_cast<double>(d) - 2.0 * x.rowwise().maxCoeff().sum());
  out.threshold = 2.0 - 2.0 * blocker_delta(d);
  out.blocked = out.distance_sq < out.threshold;
  return out;
}

FlatSearchOutcome search_flat_column(const UnitaryMatrix& U, const FlatSearchOptions& options) {
  const std::size_t d = U.dim();
  if (d < 2) throw DimensionError("flat-column search needs d >= 2");
  const int restarts = options.restarts > 0 ? options.restarts : static_cast<int>(8 * d);
  FlatSearchOutcome out;
  out.best_residual = std::numeric_limits<double>::infinity();

  std::vector<FlatConvention> conventions{FlatConvention::alice_first};
  if (options.both_conventions) conventions.push_back(FlatConvention::bob_first);

  bool any_admissible = false;
  for (FlatConvention conv : conventions) {
    const CMatrix v = convention_matrix(U, conv);
    for (std::size_t l = 0; l < d; ++l) {
      const auto li = static_cast<Eigen::Index>(l);
      const double nv = necessary_value_of(v, li);
      if (nv + 1.0 / (2.0 * std::sqrt(static_cast<double>(d))) < -kConditionTol) continue;
      any_admissible = true;
      const CMatrix w = column_weights(v, li);
      auto column_of = [&](const std::vector<double>& x) -> CVector {
        return w.transpose() * phase_vector(x);
      };
      auto objective = [&](const std::vector<double>& x) { return flat_objective(column_of(x)); };
      for (int r = 0; r < restarts; ++r) {
        const std::uint64_t stream =
            (static_cast<std::uint64_t>(conv == FlatConvention::bob_first) << 48) ^
            (static_cast<std::uint64_t>(l) << 24) ^ static_cast<std::uint64_t>(r);
        NelderMeadOptions nm;
        nm.initial_step = 1.0;
        const NelderMeadResult res =
            nelder_mead(objective, random_phases(d - 1, mix_seed(options.seed, stream)), nm);
        ++out.local_searches;
        const CVector col = column_of(res.x);
        const double residual = flat_residual(col);
        out.best_residual = std::min(out.best_residual, residual);
        if (residual < options.tol_flat) {
          std::vector<double> phases(d, 0.0);
          std::copy(res.x.begin(), res.x.end(), phases.begin() + 1);
          FlatColumnSolution sol;
          sol.column_index = l;
          sol.convention = conv;
          sol.phases = DiagonalUnitary(std::move(phases));
          sol.column = col;
          sol.residual = residual;
          out.solution = std::move(sol);
          return out;
        }
      }
    }
  }
  out.reason = any_admissible ? "not found within budget"
                              : "necessary conditions violated for every column";
  return out;
}

FlatSearchOutcome search_flat_column(const UnitaryMatrix& U, int budget, std::uint64_t seed,
                                     double tol_flat) {
  FlatSearchOptions o;
  o.restarts = budget;
  o.seed = seed;
  o.tol_flat = tol_flat;
  return search_flat_column(U, o);
}

bool verify_mutually_coherent(const UnitaryMatrix& U, const CVector& psi, double tol) {
  if (static_cast<std::size_t>(psi.size()) != U.dim()) throw DimensionError("state dimension mismatch");
  return flat_residual(psi) <= tol && flat_residual(U.matrix() * psi) <= tol;
}

CoherentStateSearch search_mutually_coherent_state(const UnitaryMatrix& U, int restarts,
                                                   std::uint64_t seed, double tol) {
  const std::size_t d = U.dim();
  if (d < 2) throw DimensionError("search needs d >= 2");
  if (restarts < 1) restarts = static_cast<int>(8 * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  const CMatrix& u = U.matrix();
  auto image = [&](const std::vector<double>& x) -> CVector { return u * (scale * phase_vector(x)); };
  auto objective = [&](const std::vector<double>& x) { return flat_objective(image(x)); };
  CoherentStateSearch out;
  out.residual = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    NelderMeadOptions nm;
    nm.initial_step = 1.0;
    const NelderMeadResult res = nelder_mead(
        objective, random_phases(d - 1, mix_seed(seed, 0xC0DEULL + static_cast<std::uint64_t>(r))), nm);
    ++out.local_searches;
    const double residual = flat_residual(image(res.x));
    if (residual < out.residual) out.residual = residual;
    if (residual < tol) {
      out.state = scale * phase_vector(res.x);
      out.residual = residual;
      return out;
    }
  }
  return out;
}

ThreeStrokeConstruction complete_three_stroke(const UnitaryMatrix& U,
                                              const FlatColumnSolution& flat,
                                              const CVector& psi_star, double tol) {
  const std::size_t d = U.dim();
  if (static_cast<std::size_t>(psi_star.size()) != d ||
      static_cast<std::size_t>(flat.column.size()) != d) {
    throw DimensionError("state dimension mismatch");
  }
  const CMatrix& u = U.matrix();
  // Alice finishes with a diagonal on the column; Bob finishes with U^dagger D U.
  const CVector target = flat.convention == FlatConvention::alice_first ? psi_star : CVector(u * psi_star);
  std::vector<double> phases(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    phases[j] = std::arg(target(jj)) - std::arg(flat.column(jj));
  }
  ThreeStrokeConstruction out;
  out.flat = flat;
  out.completion = DiagonalUnitary(std::move(phases));
  const CVector rephased = out.completion.diagonal().cwiseProduct(flat.column);
  out.state = flat.convention == FlatConvention::alice_first ? rephased
                                                             : CVector(u.adjoint() * rephased);
  out.verified = verify_mutually_coherent(U, out.state, tol);
  return out;
}

}  // namespace reseng
