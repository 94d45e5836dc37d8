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


#include "reseng/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "reseng/errors.hpp"

namespace reseng {

namespace {

// Dense simplex tableau in canonical form; minimises c^T x with x >= 0 using Bland's rule.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Returns the optimal objective value.
  double minimise(const std::vector<double>& cost, double eps) {
    std::vector<double> reduced(cols_);
    const std::size_t max_iter = 50 * (rows_ + cols_) + 100;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        double z = cost[c];
        for (std::size_t r = 0; r < rows_; ++r) z -= cost[basis_[r]] * at(r, c);
        if (z < -eps) {
          enter = c;
          break;
        }
      }
      if (enter == cols_) break;
      std::size_t leave = rows_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double coef = at(r, enter);
        if (coef <= eps) continue;
        const double ratio = rhs(r) / coef;
        if (ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && leave < rows_ && basis_[r] < basis_[leave])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave == rows_) throw Error("linear program unbounded");
      pivot(leave, enter);
    }
    double obj = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) obj += cost[basis_[r]] * rhs(r);
    return obj;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

HullMembership hull_membership(const std::vector<ProbabilityVector>& vertices,
                               const ProbabilityVector& p, double tol) {
  HullMembership out;
  const std::size_t m = vertices.size();
  if (m == 0) {
    out.inside = false;
    out.l1_residual = std::numeric_limits<double>::infinity();
    return out;
  }
  const std::size_t d = p.size();
  for (const auto& v : vertices) {
    if (v.size() != d) throw DimensionError("hull vertex dimension mismatch");
  }
  // Columns: lambda_0..lambda_{m-1}, a+_0..a+_{d-1}, a-_0..a-_{d-1}. Rows: d coordinates, sum.
  const std::size_t cols = m + 2 * d;
  Tableau t(d + 1, cols);
  std::vector<double> cost(cols, 0.0);
  for (std::size_t k = 0; k < 2 * d; ++k) cost[m + k] = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < m; ++i) t.at(k, i) = vertices[i][k];
    t.at(k, m + k) = 1.0;
    t.at(k, m + d + k) = -1.0;
    t.rhs(k) = p[k];
  }
  for (std::size_t i = 0; i < m; ++i) t.at(d, i) = 1.0;
  t.rhs(d) = 1.0;
  // Start from lambda_0 = 1: eliminate it from the coordinate rows, then make the slack with
  // the right sign basic in each row.
  t.basis()[d] = 0;
  for (std::size_t k = 0; k < d; ++k) {
    const double f = t.at(k, 0);
    if (f != 0.0) {
      for (std::size_t c = 0; c <= cols; ++c) t.at(k, c) -= f * t.at(d, c);
    }
    if (t.rhs(k) < 0.0) {
      for (std::size_t c = 0; c <= cols; ++c) t.at(k, c) = -t.at(k, c);
      t.basis()[k] = m + d + k;
    } else {
      t.basis()[k] = m + k;
    }
  }
  const double obj = t.minimise(cost, 1e-12);
  out.l1_residual = std::max(obj, 0.0);
  out.inside = out.l1_residual <= tol;
  out.weights.assign(m, 0.0);
  for (std::size_t r = 0; r <= d; ++r) {
    if (t.basis()[r] < m) out.weights[t.basis()[r]] = std::max(t.rhs(r), 0.0);
  }
  return out;
}

bool in_hull(const std::vector<ProbabilityVector>& vertices, const ProbabilityVector& p,
             double tol) {
  return hull_membership(vertices, p, tol).inside;
}

std::vector<ProbabilityVector> prune_hull(std::vector<ProbabilityVector> points, double tol) {
  if (points.empty()) return {};
  std::vector<ProbabilityVector> pts = dedup_points(std::move(points), tol::kCoincident);
  if (pts.size() <= 1) return pts;
  const std::size_t d = pts.front().size();
  std::vector<double> centroid(d, 0.0);
  for (const auto& p : pts) {
    if (p.size() != d) throw DimensionError("point dimension mismatch");
    for (std::size_t k = 0; k < d; ++k) centroid[k] += p[k];
  }
  for (double& c : centroid) c /= static_cast<double>(pts.size());
  std::vector<double> dist(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += (pts[i][k] - centroid[k]) * (pts[i][k] - centroid[k]);
    dist[i] = s;
  }
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dist[a] > dist[b]; });

  std::vector<ProbabilityVector> kept;
  for (std::size_t idx : order) {
    if (kept.empty() || !in_hull(kept, pts[idx], tol)) kept.push_back(pts[idx]);
  }
  // Points kept early may have become interior to later additions.
  std::sort(kept.begin(), kept.end(), lex_less);
  for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
    std::vector<ProbabilityVector> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (in_hull(others, kept[i], tol)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return kept;
}

double hausdorff_distance(const std::vector<ProbabilityVector>& a,
                          const std::vector<ProbabilityVector>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<ProbabilityVector>& x,
                     const std::vector<ProbabilityVector>& y) {
    double worst = 0.0;
    for (const auto& p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : y) {
        if (p.size() != q.size()) throw DimensionError("point dimension mismatch");
        double s = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
        best = std::min(best, s);
      }
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace reseng
