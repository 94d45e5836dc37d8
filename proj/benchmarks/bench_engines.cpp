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


#include <benchmark/benchmark.h>

#include <random>

#include "reseng/athermality.hpp"
#include "reseng/coherence.hpp"
#include "reseng/hull.hpp"
#include "reseng/mutual.hpp"
#include "reseng/qubit.hpp"

namespace {

using namespace reseng;

void BM_SimulateQutrit(benchmark::State& state) {
  const auto params = EngineParams::from_temperatures(EnergyLevels::ladder(3), InverseTemperature(1.0 / 3.0),
                                                      InverseTemperature(0.2));
  const auto strokes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto sets = simulate(params, StartState::gamma(), strokes, 0.0);
    benchmark::DoNotOptimize(sets.back().vertices.size());
  }
}
BENCHMARK(BM_SimulateQutrit)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SimulateInfiniteHot(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto params =
      EngineParams::from_temperatures(EnergyLevels::ladder(d), InverseTemperature(1.0), InverseTemperature(0.0));
  for (auto _ : state) {
    auto sets = simulate(params, StartState::gamma(), 20, 0.0);
    benchmark::DoNotOptimize(sets.back().vertices.size());
  }
}
BENCHMARK(BM_SimulateInfiniteHot)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PruneHull(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(11);
  std::exponential_distribution<double> e(1.0);
  std::vector<ProbabilityVector> pts;
  for (std::size_t k = 0; k < n; ++k) pts.push_back(ProbabilityVector::from_weights({e(rng), e(rng), e(rng), e(rng)}));
  for (auto _ : state) {
    auto hull = prune_hull(pts, kLpTolerance);
    benchmark::DoNotOptimize(hull.size());
  }
}
BENCHMARK(BM_PruneHull)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CheckH2Fourier(benchmark::State& state) {
  const auto F = UnitaryMatrix::fourier(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_h2(F).satisfied);
}
BENCHMARK(BM_CheckH2Fourier)->Arg(6)->Arg(32);

void BM_CheckH2Sparse(benchmark::State& state) {
  // Cyclic permutation: the search runs to the Wielandt horizon.
  const auto d = static_cast<Eigen::Index>(state.range(0));
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, (i + 1) % d) = 1.0;
  const UnitaryMatrix U(m);
  for (auto _ : state) benchmark::DoNotOptimize(check_h2(U).satisfied);
}
BENCHMARK(BM_CheckH2Sparse)->Arg(6)->Arg(32);

void BM_SynthesizeUnitary(benchmark::State& state) {
  const double alpha = 0.05;
  const UnitaryMatrix V = euler_compose(EulerAngles{0.7, 1.3, 2.1, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_unitary(V, alpha).size());
}
BENCHMARK(BM_SynthesizeUnitary);

void BM_FlatColumnSearch(benchmark::State& state) {
  const UnitaryMatrix F = UnitaryMatrix::fourier(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_flat_column(F, 4, 1).solution.has_value());
}
BENCHMARK(BM_FlatColumnSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
