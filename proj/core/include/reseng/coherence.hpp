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

// Coherence engine for general d: zero patterns, primitivity of P^T P, stroke bounds and
// dense-product synthesis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "reseng/boolean_matrix.hpp"
#include "reseng/unitary.hpp"

namespace reseng {

inline constexpr double kZeroTol = 1e-12;
inline constexpr double kNearZeroFlag = 1e-6;
inline constexpr double kDenseTol = 1e-8;
inline constexpr int kRetryMax = 64;

using PatternMatrix = BoolMatrix;

PatternMatrix pattern_matrix(const UnitaryMatrix& U, double tol_zero = kZeroTol);

// x_ij = |u_ij|.
RMatrix amplitude_matrix(const UnitaryMatrix& U);

// True when some |u_ij| lies in (tol_zero, 1e-6): the pattern depends on the threshold.
bool pattern_threshold_sensitive(const UnitaryMatrix& U, double tol_zero = kZeroTol);

struct H2Result {
  bool satisfied = false;
  std::optional<int> minimal_M;
  int search_horizon = 0;  // (d-1)^2 + 1
  bool threshold_sensitive = false;
};

H2Result check_h2(const UnitaryMatrix& U, double tol_zero = kZeroTol);

// Boolean powers of T = P^T P, early exit on all-true or stagnation.
H2Result check_h2_pattern(const PatternMatrix& P);

struct GraphDiagnosis {
  bool irreducible = false;
  bool aperiodic = false;
  std::optional<int> M_upper;
  std::optional<std::size_t> anchor;  // looped vertex i0 attaining M_upper
  std::size_t components = 0;         // strongly connected components
};

// P is read as the adjacency matrix of a directed graph (edge i -> j iff P_ij).
// M_upper = max_i alpha_i + max_j beta_j with alpha_i (beta_j) the shortest positive walk length
// from i to i0 (i0 to j), minimised over looped anchors i0. For symmetric P this is 2 max_i alpha_i.
GraphDiagnosis graph_diagnosis(const PatternMatrix& P);

double c_U(const UnitaryMatrix& U);

// 2 log(d-1) / log((d-2) c_U + 1); +infinity when c_U = 0.
double lower_bound_strokes(const UnitaryMatrix& U);

// F_d^alpha from the spectral projectors of F_d with principal eigenphases (0, pi/2, pi, -pi/2).
UnitaryMatrix fractional_fourier(std::size_t d, double alpha);

// 6 d (N_F + 1) + 1 for even d >= 4, N_F >= 1.
long long upper_bound_strokes(long long d, long long n_fourier);

struct DenseProduct {
  std::vector<DiagonalUnitary> diagonals;  // D_1 .. D_2M
  CMatrix product;
  double min_modulus = 0.0;
  int attempts = 0;
  std::uint64_t attempt_seed = 0;
};

// D_1 U^dagger D_2 U ... D_{2M-1} U^dagger D_{2M} U.
CMatrix alternating_product(const UnitaryMatrix& U, const std::vector<DiagonalUnitary>& diagonals);

// Random phases until every entry of the alternating product exceeds tol_dense in modulus.
DenseProduct synthesize_dense_product(const UnitaryMatrix& U, int M, std::uint64_t seed,
                                      int retry_max = kRetryMax, double tol_dense = kDenseTol);

// (X^T X)^M with X = |U|: entrywise bound on any alternating product with M factors of each kind.
RMatrix amplitude_bound(const UnitaryMatrix& U, int M);

// True when rows and columns can be permuted so the pattern becomes block diagonal with at least
// two blocks (bipartite row/column graph disconnected).
bool permuted_block_diagonal(const PatternMatrix& P);

// Deterministic seed mixing.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace reseng
