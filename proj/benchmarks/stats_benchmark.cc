// Copyright 2026 The dowtrend Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "dowtrend/stats.h"

namespace dowtrend {
namespace {

std::vector<double> lognormal_draws(std::size_t n) {
  std::mt19937_64 rng(1);
  std::lognormal_distribution<double> d(-0.5, 0.4);
  std::vector<double> xs(n);
  for (double& x : xs) x = d(rng);
  return xs;
}

void BM_AndersonDarling(benchmark::State& state) {
  const auto xs = lognormal_draws(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anderson_darling_lognormal(xs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AndersonDarling)->Arg(200)->Arg(10000);

void BM_LognormalMle(benchmark::State& state) {
  const auto xs = lognormal_draws(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lognormal_mle(xs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LognormalMle)->Arg(100000);

void BM_ConditionalMoments(benchmark::State& state) {
  const BivariateLogNormalParams p{-0.35, -1.7, 0.5, 0.55, 0.35};
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_lognormal_mean(p.x(), 0.382));
    benchmark::DoNotOptimize(conditional_cross_mean(p, 0.382));
  }
}
BENCHMARK(BM_ConditionalMoments);

}  // namespace
}  // namespace dowtrend
