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

#include "dowtrend/indicators.h"
#include "dowtrend/market_data.h"
#include "dowtrend/minmax.h"
#include "dowtrend/trend.h"

namespace dowtrend {
namespace {

void BM_MacdSar(benchmark::State& state) {
  const auto s = synth_gbm({.bars = static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(macd_sar(s, ScalingConfig(1)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MacdSar)->Arg(2000)->Arg(100000);

void BM_MinMax(benchmark::State& state) {
  const auto s = synth_gbm({.bars = static_cast<std::size_t>(state.range(0))});
  const SarSeries sar = macd_sar(s, ScalingConfig(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_minmax(s, sar));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MinMax)->Arg(2000)->Arg(100000);

// Candles to samples: SAR, MinMax, trend phases and sample extraction.
void BM_Pipeline(benchmark::State& state) {
  const auto s = synth_gbm({.bars = static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) {
    const MinMaxProcess mm = run_minmax(s, ScalingConfig(1));
    const auto phases = detect_trends(mm);
    benchmark::DoNotOptimize(extract_samples(mm, phases, s, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Pipeline)->Arg(2000)->Arg(100000);

}  // namespace
}  // namespace dowtrend

BENCHMARK_MAIN();
