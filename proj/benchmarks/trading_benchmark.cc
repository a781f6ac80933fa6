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

#include "dowtrend/market_data.h"
#include "dowtrend/trading.h"

namespace dowtrend {
namespace {

const BivariateLogNormalParams kParams{-0.35, -1.7, 0.5, 0.55, 0.35};

void BM_ExpectedReturn(benchmark::State& state) {
  const TradeSpec spec(0.382, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_return(kParams, spec));
  }
}
BENCHMARK(BM_ExpectedReturn);

void BM_MonteCarlo(benchmark::State& state) {
  const TradeSpec spec(0.382, 1.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_expected_return(kParams, spec, n, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100000)->Arg(1000000);

void BM_Backtest(benchmark::State& state) {
  const auto s = synth_gbm({.bars = 100000});
  const TradeSpec spec(0.382, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(backtest_anticyclic(s, 1.0, spec));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_Backtest);

}  // namespace
}  // namespace dowtrend
