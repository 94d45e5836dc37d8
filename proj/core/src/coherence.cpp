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


#include "reseng/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "reseng/errors.hpp"

namespace reseng {

PatternMatrix pattern_matrix(const UnitaryMatrix& U, double tol_zero) {
  const std::size_t d = U.dim();
  PatternMatrix p(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (std::abs(U(i, j)) > tol_zero) p.set(i, j);
    }
  }
  return p;
}

RMatrix amplitude_matrix(const UnitaryMatrix& U) { return U.matrix().cwiseAbs(); }

bool pattern_threshold_sensitive(const UnitaryMatrix& U, double tol_zero) {
  const RMatrix x = amplitude_matrix(U);
  return ((x.array() > tol_zero) && (x.array() < kNearZeroFlag)).any();
}

H2Result check_h2_pattern(const PatternMatrix& P) {
  if (P.rows() != P.cols()) throw DimensionError("pattern must be square");
  const std::size_t d = P.rows();
  H2Result out;
  out.search_horizon = static_cast<int>((d - 1) * (d - 1) + 1);
  if (d == 0) return out;
  const BoolMatrix t = P.transpose() * P;
  BoolMatrix power = t;
  for (int m = 1; m <= out.search_horizon; ++m) {
    if (power.all_true()) {
      out.satisfied = true;
      out.minimal_M = m;
      return out;
    }
    BoolMatrix next = power * t;
    if (next == power) break;
    power = std::move(next);
  }
  return out;
}

H2Result check_h2(const UnitaryMatrix& U, double tol_zero) {
  H2Result out = check_h2_pattern(pattern_matrix(U, tol_zero));
  out.threshold_sensitive = pattern_threshold_sensitive(U, tol_zero);
  return out;
}

namespace {

std::size_t count_scc(const PatternMatrix& P) {
  const std::size_t n = P.rows();
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int counter = 0;
  std::size_t components = 0;
  std::function<void(std::size_t)> strongconnect = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (!P.get(v, w)) continue;
      if (index[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
      } while (w != v);
      ++components;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) strongconnect(v);
  }
  return components;
}

// Shortest walk lengths from `src` following edges forwards (or backwards).
std::vector<int> bfs(const PatternMatrix& P, std::size_t src, bool backwards) {
  const std::size_t n = P.rows();
  std::vector<int> dist(n, -1);
  std::deque<std::size_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < n; ++w) {
      const bool edge = backwards ? P.get(w, v) : P.get(v, w);
      if (edge && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

GraphDiagnosis graph_diagnosis(const PatternMatrix& P) {
  if (P.rows() != P.cols()) throw DimensionError("pattern must be square");
  const std::size_t n = P.rows();
  GraphDiagnosis out;
  if (n == 0) return out;
  out.components = count_scc(P);
  out.irreducible = out.components == 1;
  bool any_loop = false;
  for (std::size_t i = 0; i < n; ++i) any_loop = any_loop || P.get(i, i);
  out.aperiodic = out.irreducible && any_loop;
  if (!out.aperiodic) return out;
  for (std::size_t i0 = 0; i0 < n; ++i0) {
    if (!P.get(i0, i0)) continue;
    const std::vector<int> to_anchor = bfs(P, i0, true);
    const std::vector<int> from_anchor = bfs(P, i0, false);
    int a = 1;
    int b = 1;
    for (std::size_t i = 0; i < n; ++i) {
      a = std::max(a, to_anchor[i]);
      b = std::max(b, from_anchor[i]);
    }
    if (!out.M_upper || a + b < *out.M_upper) {
      out.M_upper = a + b;
      out.anchor = i0;
    }
  }
  return out;
}

double c_U(const UnitaryMatrix& U) {
  const std::size_t d = U.dim();
  if (d < 3) throw DomainError("c_U requires d >= 3");
  const RMatrix x = amplitude_matrix(U);
  const RMatrix g = x.transpose() * x;
  double best = 0.0;
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = 0; b < g.cols(); ++b) {
      if (a != b) best = std::max(best, g(a, b));
    }
  }
  return std::clamp(best, 0.0, 1.0);
}

double lower_bound_strokes(const UnitaryMatrix& U) {
  const double c = c_U(U);
  const double d = static_cast<double>(U.dim());
  const double den = std::log1p((d - 2.0) * c);
  if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
  return 2.0 * std::log(d - 1.0) / den;
}

UnitaryMatrix fractional_fourier(std::size_t d, double alpha) {
  if (d < 2) throw DomainError("fractional Fourier requires d >= 2");
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  if (alpha == 1.0) return UnitaryMatrix::fourier(d);
  if (alpha == 0.0) return UnitaryMatrix::identity(d);
  const CMatrix f = UnitaryMatrix::fourier(d).matrix();
  const auto n = static_cast<Eigen::Index>(d);
  const CMatrix id = CMatrix::Identity(n, n);
  const double half_pi = kTwoPi / 4.0;
  const Complex eig[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  const double phase[4] = {0.0, half_pi, 2.0 * half_pi, -half_pi};
  CMatrix out = CMatrix::Zero(n, n);
  for (int l = 0; l < 4; ++l) {
    CMatrix proj = id;
    for (int m = 0; m < 4; ++m) {
      if (m == l) continue;
      proj = proj * (f - eig[m] * id) / (eig[l] - eig[m]);
    }
    out += std::polar(1.0, alpha * phase[l]) * proj;
  }
  return UnitaryMatrix(std::move(out));
}

long long upper_bound_strokes(long long d, long long n_fourier) {
  if (d < 4 || d % 2 != 0) throw DomainError("upper bound requires even d >= 4");
  if (n_fourier < 1) throw DomainError("N_F must be at least 1");
  return 6 * d * (n_fourier + 1) + 1;
}

CMatrix alternating_product(const UnitaryMatrix& U, const std::vector<DiagonalUnitary>& diagonals) {
  if (diagonals.empty() || diagonals.size() % 2 != 0) {
    throw PreconditionError("diagonals", "need an even, non-zero number of diagonals");
  }
  const CMatrix& u = U.matrix();
  const CMatrix ud = u.adjoint();
  const auto n = u.rows();
  CMatrix acc = CMatrix::Identity(n, n);
  for (std::size_t k = 0; k < diagonals.size(); k += 2) {
    if (diagonals[k].dim() != U.dim() || diagonals[k + 1].dim() != U.dim()) {
      throw DimensionError("diagonal unitary dimension mismatch");
    }
    acc = acc * diagonals[k].diagonal().asDiagonal() * ud * diagonals[k + 1].diagonal().asDiagonal() * u;
  }
  return acc;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

DenseProduct synthesize_dense_product(const UnitaryMatrix& U, int M, std::uint64_t seed,
                                      int retry_max, double tol_dense) {
  if (M < 1) throw PreconditionError("M", "must be at least 1");
  if (retry_max < 1) throw PreconditionError("retry_max", "must be at least 1");
  const H2Result h2 = check_h2(U);
  if (!h2.satisfied) throw StructuralImpossibility("pattern of U^T U is not primitive");
  if (M < *h2.minimal_M) {
    throw StructuralImpossibility("M is below the minimal Boolean power " +
                                  std::to_string(*h2.minimal_M));
  }
  const std::size_t d = U.dim();
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int attempt = 0; attempt < retry_max; ++attempt) {
    DenseProduct out;
    out.attempts = attempt + 1;
    out.attempt_seed = mix_seed(seed, static_cast<std::uint64_t>(attempt));
    std::mt19937_64 rng(out.attempt_seed);
    for (int k = 0; k < 2 * M; ++k) {
      std::vector<double> ph(d);
      for (double& t : ph) t = phase(rng);
      out.diagonals.emplace_back(std::move(ph));
    }
    out.product = alternating_product(U, out.diagonals);
    out.min_modulus = out.product.cwiseAbs().minCoeff();
    if (out.min_modulus > tol_dense) return out;
  }
  throw RetryExhausted("dense product not found within retry budget", seed);
}

RMatrix amplitude_bound(const UnitaryMatrix& U, int M) {
  if (M < 0) throw PreconditionError("M", "must be non-negative");
  const RMatrix x = amplitude_matrix(U);
  const RMatrix g = x.transpose() * x;
  RMatrix out = RMatrix::Identity(g.rows(), g.cols());
  for (int m = 0; m < M; ++m) out = out * g;
  return out;
}

bool permuted_block_diagonal(const PatternMatrix& P) {
  const std::size_t r = P.rows();
  const std::size_t c = P.cols();
  std::vector<std::size_t> parent(r + c);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (P.get(i, j)) parent[find(i)] = find(r + j);
    }
  }
  std::size_t roots = 0;
  for (std::size_t v = 0; v < r + c; ++v) roots += find(v) == v ? 1 : 0;
  return roots > 1;
}

}  // namespace reseng
