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

#ifndef DOWTREND_SYNTHETIC_H_
#define DOWTREND_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dowtrend/market_data.h"
#include "dowtrend/stats.h"

namespace dowtrend {

// A zig-zag chart with known retracements: every movement rises by
// relative_movement times its starting low, every correction gives back a
// log-normal fraction X of that movement. Legs are straight lines: a
// movement spans movement_bars bars and a correction max(min_leg_bars,
// round(X * movement_bars)) bars, so both travel at about the same speed.
// Draws of X that would take the price to zero or below are redrawn.
struct PlantedTrendSpec {
  double start_price = 100.0;
  double relative_movement = 0.10;
  LogNormalParams retracement{-0.5, 0.35};
  std::size_t corrections = 200;
  std::size_t movement_bars = 24;
  std::size_t min_leg_bars = 6;
  std::uint64_t seed = 1;
  std::string symbol = "PLANTED";
};

struct PlantedTrend {
  CandleSeries series;
  // Planted X values in chart order.
  std::vector<double> retracements;
  // Bars of the planted turning points, starting with the first low.
  std::vector<std::size_t> turning_bars;
};

PlantedTrend synth_planted_trend(const PlantedTrendSpec& spec);

}  // namespace dowtrend

#endif  // DOWTREND_SYNTHETIC_H_
