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


#include "reseng_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "reseng/errors.hpp"

namespace reseng::cli {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 40.0;

struct Pt {
  double x;
  double y;
};

// e1 bottom left, e2 bottom right, e3 top.
Pt project(const ProbabilityVector& p) {
  const double h = std::sqrt(3.0) / 2.0;
  const double u = p[1] + 0.5 * p[2];
  const double v = h * p[2];
  return {kMargin + kSize * u, kMargin + kSize * (h - v)};
}

std::vector<Pt> convex_polygon(const std::vector<ProbabilityVector>& pts) {
  std::vector<Pt> out;
  for (const auto& p : pts) out.push_back(project(p));
  std::sort(out.begin(), out.end(), [](Pt a, Pt b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](Pt a, Pt b) { return std::abs(a.x - b.x) < 1e-9 && std::abs(a.y - b.y) < 1e-9; }),
            out.end());
  if (out.size() < 3) return out;
  auto cross = [](Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
  std::vector<Pt> hull(2 * out.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], out[i]) <= 0) --k;
    hull[k++] = out[i];
  }
  for (std::size_t i = out.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], out[i]) <= 0) --k;
    hull[k++] = out[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::string points_attr(const std::vector<Pt>& poly) {
  std::string s;
  char buf[64];
  for (const Pt& p : poly) {
    std::snprintf(buf, sizeof buf, "%s%.4f,%.4f", s.empty() ? "" : " ", p.x, p.y);
    s += buf;
  }
  return s;
}

std::string polygon(const std::vector<Pt>& poly, const char* style) {
  if (poly.empty()) return {};
  return "  <polygon points=\"" + points_attr(poly) + "\" " + style + "/>\n";
}

}  // namespace

std::string simplex_svg(const SimplexPlot& plot) {
  auto check = [](const std::vector<ProbabilityVector>& v) {
    for (const auto& p : v) {
      if (p.size() != 3) throw DimensionError("simplex plot needs d = 3");
    }
  };
  check(plot.reachable);
  check(plot.polytope);
  check(plot.markers);

  const double w = kSize + 2 * kMargin;
  const double h = kSize * std::sqrt(3.0) / 2.0 + 2 * kMargin;
  char buf[256];
  std::string s;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                w, h, w, h);
  s += buf;
  s += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const ProbabilityVector e1 = ProbabilityVector::basis(3, 0);
  const ProbabilityVector e2 = ProbabilityVector::basis(3, 1);
  const ProbabilityVector e3 = ProbabilityVector::basis(3, 2);
  const std::vector<Pt> tri{project(e1), project(e2), project(e3)};

  const double b = plot.band_threshold;
  if (b < 1.0) {
    const double lo = std::max(b, 0.0);
    const std::vector<Pt> band{project(ProbabilityVector({1.0 - lo, 0.0, lo})),
                               project(ProbabilityVector({0.0, 1.0 - lo, lo})), project(e3)};
    s += polygon(band, "fill=\"#f4c7c3\" stroke=\"none\"");
  }
  s += polygon(convex_polygon(plot.reachable), "fill=\"#c6dbef\" stroke=\"#3182bd\" stroke-width=\"1.5\"");
  s += polygon(convex_polygon(plot.polytope), "fill=\"#a1d99b\" stroke=\"#31a354\" stroke-width=\"1.5\"");
  s += polygon(tri, "fill=\"none\" stroke=\"black\" stroke-width=\"1\"");

  for (const auto& p : plot.markers) {
    const Pt q = project(p);
    std::snprintf(buf, sizeof buf, "  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"3\" fill=\"black\"/>\n", q.x, q.y);
    s += buf;
  }
  const char* labels[3] = {"1", "2", "3"};
  const double dx[3] = {-16, 6, -4};
  const double dy[3] = {14, 14, -8};
  for (int k = 0; k < 3; ++k) {
    std::snprintf(buf, sizeof buf,
                  "  <text x=\"%.4f\" y=\"%.4f\" font-family=\"sans-serif\" font-size=\"14\">%s</text>\n",
                  tri[static_cast<std::size_t>(k)].x + dx[k], tri[static_cast<std::size_t>(k)].y + dy[k], labels[k]);
    s += buf;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace reseng::cli
