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


#include <gtest/gtest.h>

#include <array>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "reseng/errors.hpp"
#include "reseng/hull.hpp"
#include "reseng/thermo.hpp"

namespace {

using namespace reseng;
using Vec = std::vector<double>;

ProbabilityVector pv(Vec v) { return ProbabilityVector(std::move(v)); }

void expect_vec_near(const ProbabilityVector& a, const Vec& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_NEAR(a[k], b[k], tol) << "component " << k;
}

TEST(ProbabilityVector, ClampsTinyNegativesAndRenormalises) {
  const auto p = pv({0.5 + 5e-13, 0.5, -5e-13});
  EXPECT_EQ(p[2], 0.0);
  EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-15);
}

TEST(ProbabilityVector, RejectsInvalidInput) {
  EXPECT_THROW(pv({0.6, 0.6}), DomainError);
  EXPECT_THROW(pv({1.1, -0.1}), DomainError);
  EXPECT_THROW(EnergyLevels({2.0, 1.0}), DomainError);
  EXPECT_THROW(EnergyLevels({1.0}), DimensionError);
  EXPECT_THROW(InverseTemperature(-1.0), DomainError);
}

TEST(GibbsState, DegenerateLevelsGiveUniform) {
  expect_vec_near(gibbs_state(EnergyLevels({5, 5, 5}), InverseTemperature(1.0)), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-15);
}

TEST(GibbsState, InfiniteTemperatureIsExactlyUniform) {
  const auto g = gibbs_state(EnergyLevels({1, 2}), InverseTemperature(0.0));
  EXPECT_EQ(g[0], 0.5);
  EXPECT_EQ(g[1], 0.5);
}

TEST(GibbsState, QutritAtBetaOneFifth) {
  // Frozen from a log-sum-exp evaluation.
  expect_vec_near(gibbs_state(EnergyLevels({1, 2, 3}), InverseTemperature(0.2)),
                  {0.4017595785333555, 0.32893292228890664, 0.26930749917773783}, 1e-15);
}

TEST(GibbsState, LargeEnergiesDoNotOverflow) {
  const auto g = gibbs_state(EnergyLevels({1e5, 1e5 + 1, 1e5 + 2}), InverseTemperature(50.0));
  expect_vec_near(g, oracle::gibbs({0, 1, 2}, 50.0), 1e-15);
}

TEST(BetaOrder, EqualRatiosKeepIndexOrder) {
  const auto g = pv({0.5, 0.3, 0.2});
  EXPECT_EQ(beta_order(g, g).perm, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(BetaOrder, QubitExample) {
  EXPECT_EQ(beta_order(pv({0.5, 0.5}), pv({0.6, 0.4})).perm, (std::vector<std::size_t>{1, 0}));
}

TEST(BetaOrder, SharpStateFirst) {
  const auto perm = beta_order(pv({1, 0, 0}), pv({0.2, 0.3, 0.5})).perm;
  EXPECT_EQ(perm.front(), 0U);
}

TEST(BetaOrder, ZeroGibbsWeightRejected) {
  try {
    beta_order(pv({0.5, 0.5}), pv({1.0, 0.0}));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate Gibbs weight"), std::string::npos);
  }
}

TEST(ThermoCurve, GibbsGivesDiagonal) {
  const auto g = pv({0.5, 0.3, 0.2});
  const auto c = thermo_curve(g, g);
  for (const auto& e : c.elbows()) EXPECT_NEAR(e.x, e.y, 1e-15);
}

TEST(ThermoCurve, SharpQubit) {
  const auto c = thermo_curve(pv({1, 0}), pv({0.7, 0.3}));
  ASSERT_EQ(c.elbows().size(), 3U);
  EXPECT_NEAR(c.elbows()[1].x, 0.7, 1e-15);
  EXPECT_NEAR(c.elbows()[1].y, 1.0, 1e-15);
  EXPECT_EQ(c.elbows()[2].x, 1.0);
  EXPECT_EQ(c.elbows()[2].y, 1.0);
}

TEST(ThermoCurve, QubitElbows) {
  const auto c = thermo_curve(pv({0.5, 0.5}), pv({0.6, 0.4}));
  ASSERT_EQ(c.elbows().size(), 3U);
  EXPECT_NEAR(c.elbows()[1].x, 0.4, 1e-15);
  EXPECT_NEAR(c.elbows()[1].y, 0.5, 1e-15);
}

TEST(CurveValue, Examples) {
  const auto g = pv({0.5, 0.3, 0.2});
  EXPECT_NEAR(curve_value(thermo_curve(g, g), 0.37), 0.37, 1e-15);
  EXPECT_NEAR(curve_value(thermo_curve(pv({1, 0}), pv({0.6, 0.4})), 0.3), 0.5, 1e-15);
  EXPECT_EQ(curve_value(thermo_curve(pv({0.2, 0.3, 0.5}), g), 1.0), 1.0);
  EXPECT_THROW(curve_value(thermo_curve(g, g), 1.5), DomainError);
  EXPECT_THROW(curve_value(thermo_curve(g, g), -0.1), DomainError);
}

TEST(Thermomajorises, Examples) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Vec gv = oracle::random_simplex(rng, 4);
    const auto g = pv(gv);
    const auto q = pv(oracle::random_simplex(rng, 4));
    EXPECT_TRUE(thermomajorises(q, q, g));
    EXPECT_TRUE(thermomajorises(ProbabilityVector::basis(4, 0), q, ProbabilityVector::uniform(4)));
    EXPECT_TRUE(thermomajorises(q, g, g));
    EXPECT_FALSE(thermomajorises(g, q, g));
  }
  const auto g = pv({0.5, 0.3, 0.2});
  EXPECT_TRUE(thermomajorises(g, g, g));
}

TEST(Thermomajorises, AgreesWithCurveOracle) {
  std::mt19937_64 rng(2);
  int agree = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t d = 2 + t % 4;
    const Vec g = oracle::random_simplex(rng, d);
    const Vec p = oracle::random_simplex(rng, d);
    const Vec q = (t % 2) ? oracle::gibbs_stochastic_image(p, g, rng) : oracle::random_simplex(rng, d);
    const bool expected = oracle::majorises(p, q, g, 1e-10);
    if (thermomajorises(pv(p), pv(q), pv(g)) == expected) ++agree;
  }
  EXPECT_EQ(agree, 500);
}

TEST(ExtremalAchievable, QubitIsStateAndFlip) {
  const Vec g{0.7, 0.3};
  const Vec p{0.2, 0.8};
  const auto ext = extremal_achievable(pv(p), pv(g));
  ASSERT_EQ(ext.size(), 2U);
  const double flip = oracle::qubit_flip(p[0], g[0]);
  const double lo = std::min(flip, p[0]);
  const double hi = std::max(flip, p[0]);
  EXPECT_NEAR(ext[0][0], lo, 1e-14);
  EXPECT_NEAR(ext[1][0], hi, 1e-14);
}

TEST(ExtremalAchievable, GibbsOnlyReachesGibbs) {
  const auto g = pv({0.5, 0.3, 0.2});
  const auto ext = extremal_achievable(g, g);
  ASSERT_EQ(ext.size(), 1U);
  expect_vec_near(ext[0], g.vec(), 1e-14);
}

TEST(ExtremalAchievable, QutritSoundAndComplete) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const Vec g = oracle::random_simplex(rng, 3);
    const Vec p = oracle::random_simplex(rng, 3);
    const auto ext = extremal_achievable(pv(p), pv(g));
    EXPECT_LE(ext.size(), 6U);
    for (const auto& q : ext) EXPECT_TRUE(oracle::majorises(p, q.vec(), g, 1e-9));
    for (int s = 0; s < 25; ++s) {
      const auto img = pv(oracle::gibbs_stochastic_image(p, g, rng));
      EXPECT_TRUE(in_hull(ext, img, 1e-9));
    }
  }
}

TEST(ThermaliseSubset, FullAndEmpty) {
  const auto g = pv({0.5, 0.3, 0.2});
  const auto p = pv({0.1, 0.1, 0.8});
  const std::array<std::size_t, 3> all{0, 1, 2};
  expect_vec_near(thermalise_subset(p, g, all), g.vec(), 1e-15);
  EXPECT_EQ(thermalise_subset(p, g, std::span<const std::size_t>{}), p);
}

TEST(ThermaliseSubset, RandomResultIsMajorised) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 4;
    const Vec g = oracle::random_simplex(rng, d);
    const Vec p = oracle::random_simplex(rng, d);
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < d; ++k) {
      if (rng() % 2) s.push_back(k);
    }
    const auto r = thermalise_subset(pv(p), pv(g), s);
    EXPECT_TRUE(oracle::majorises(p, r.vec(), g));
    double in_p = 0.0;
    double in_r = 0.0;
    for (std::size_t k : s) {
      in_p += p[k];
      in_r += r[k];
    }
    EXPECT_NEAR(in_p, in_r, 1e-14);
  }
}

TEST(TwoLevelTransfer, Example) {
  const auto g = gibbs_state(EnergyLevels({1, 2, 3}), InverseTemperature(0.5));
  expect_vec_near(two_level_transfer(pv({0, 0.5, 0.5}), g, 0, 2, 0.5), {0.5, 0.5, 0.0}, 1e-15);
  EXPECT_EQ(two_level_transfer(pv({0, 0.5, 0.5}), g, 0, 2, 0.0), pv({0, 0.5, 0.5}));
}

TEST(TwoLevelTransfer, PreconditionsNameTheField) {
  const auto g = gibbs_state(EnergyLevels({1, 2, 3}), InverseTemperature(0.5));
  auto field_of = [&](auto&& f) -> std::string {
    try {
      f();
    } catch (const PreconditionError& e) {
      return e.field();
    }
    return "";
  };
  EXPECT_EQ(field_of([&] { two_level_transfer(pv({0.2, 0.3, 0.5}), g, 0, 2, 0.1); }), "p_i");
  EXPECT_EQ(field_of([&] { two_level_transfer(pv({0, 0.5, 0.5}), g, 0, 2, 0.7); }), "a");
  EXPECT_EQ(field_of([&] { two_level_transfer(pv({0.5, 0.5, 0}), g, 2, 0, 0.1); }), "E_i");
}

TEST(TwoLevelTransfer, RandomResultIsMajorised) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 2 + t % 4;
    Vec E(d);
    for (std::size_t k = 0; k < d; ++k) E[k] = static_cast<double>(k) + u(rng);
    std::sort(E.begin(), E.end());
    const Vec g = oracle::gibbs(E, 0.1 + u(rng));
    Vec p = oracle::random_simplex(rng, d);
    const std::size_t j = 1 + rng() % (d - 1);
    const std::size_t i = rng() % j;
    p[j] += p[i];
    p[i] = 0.0;
    const double a = u(rng) * p[j];
    const auto r = two_level_transfer(pv(p), pv(g), i, j, a);
    EXPECT_TRUE(oracle::majorises(p, r.vec(), g)) << "trial " << t;
  }
}

TEST(Properties, Reflexivity) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 2 + t % 4;
    const auto g = pv(oracle::random_simplex(rng, d));
    const auto p = pv(oracle::random_simplex(rng, d));
    ASSERT_TRUE(thermomajorises(p, p, g));
  }
}

TEST(Properties, Transitivity) {
  std::mt19937_64 rng(11);
  int chains = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 2 + t % 4;
    const Vec g = oracle::random_simplex(rng, d);
    const Vec p = oracle::random_simplex(rng, d);
    const Vec q = oracle::gibbs_stochastic_image(p, g, rng);
    const Vec r = oracle::gibbs_stochastic_image(q, g, rng);
    if (thermomajorises(pv(p), pv(q), pv(g)) && thermomajorises(pv(q), pv(r), pv(g))) {
      ++chains;
      ASSERT_TRUE(thermomajorises(pv(p), pv(r), pv(g))) << "trial " << t;
    }
  }
  EXPECT_GT(chains, 900);
}

TEST(Properties, GibbsMinimality) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 2 + t % 4;
    const auto g = pv(oracle::random_simplex(rng, d));
    ASSERT_TRUE(thermomajorises(pv(oracle::random_simplex(rng, d)), g, g));
  }
}

TEST(Properties, CurveEndpointsAndConcavity) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t d = 2 + t % 5;
    const auto c = thermo_curve(pv(oracle::random_simplex(rng, d)), pv(oracle::random_simplex(rng, d)));
    const auto& e = c.elbows();
    ASSERT_EQ(e.size(), d + 1);
    EXPECT_EQ(e.front().x, 0.0);
    EXPECT_EQ(e.front().y, 0.0);
    EXPECT_EQ(e.back().x, 1.0);
    EXPECT_EQ(e.back().y, 1.0);
    for (std::size_t k = 2; k < e.size(); ++k) {
      const double s1 = (e[k - 1].y - e[k - 2].y) / (e[k - 1].x - e[k - 2].x);
      const double s2 = (e[k].y - e[k - 1].y) / (e[k].x - e[k - 1].x);
      EXPECT_LE(s2, s1 + 1e-9);
    }
  }
}

TEST(Properties, BarStateDominance) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tested = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 2 + t % 4;
    Vec E(d, 0.0);
    for (std::size_t k = 1; k < d; ++k) E[k] = E[k - 1] + 0.2 + u(rng);
    const Vec g = oracle::gibbs(E, 0.2 + 2 * u(rng));
    const Vec p = oracle::random_simplex(rng, d);
    const Vec q = oracle::gibbs_stochastic_image(p, g, rng);
    if (!thermomajorises(pv(p), pv(q), pv(g))) continue;
    ++tested;
    const auto bar = bar_state(pv(p));
    EXPECT_NEAR(bar[d - 1], p[d - 1], 1e-15);
    ASSERT_TRUE(thermomajorises(bar, pv(q), pv(g))) << "trial " << t;
  }
  EXPECT_GT(tested, 900);
}

TEST(Properties, ExtremalHullContainsGibbsStochasticImages) {
  std::mt19937_64 rng(15);
  for (int inst = 0; inst < 6; ++inst) {
    const std::size_t d = 3 + inst % 3;
    const Vec g = oracle::random_simplex(rng, d);
    const Vec p = oracle::random_simplex(rng, d);
    const auto ext = extremal_achievable(pv(p), pv(g));
    for (int s = 0; s < 1000; ++s) {
      ASSERT_TRUE(in_hull(ext, pv(oracle::gibbs_stochastic_image(p, g, rng, 8)), 1e-9)) << inst << "/" << s;
    }
  }
}

}  // namespace
