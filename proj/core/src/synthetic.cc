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

#include "dowtrend/synthetic.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dowtrend {

PlantedTrend synth_planted_trend(const PlantedTrendSpec& spec) {
  if (!(spec.start_price > 0) || !(spec.relative_movement > 0) ||
      !(spec.retracement.sigma >= 0) || spec.movement_bars < 1 ||
      spec.min_leg_bars < 1) {
    throw std::invalid_argument("synth_planted_trend: invalid spec");
  }
  std::mt19937_64 rng(spec.seed);
  std::lognormal_distribution<double> draw_x(spec.retracement.mu,
                                             spec.retracement.sigma);
  // A correction of X movements from P2 = low (1 + m) stays positive iff
  // X < (1 + m) / m.
  const double x_cap =
      (1.0 + spec.relative_movement) / spec.relative_movement;

  PlantedTrend out;
  std::vector<double> path{spec.start_price};
  out.turning_bars.push_back(0);
  auto leg = [&](double to, std::size_t bars) {
    const double from = path.back();
    for (std::size_t i = 1; i <= bars; ++i) {
      path.push_back(from + (to - from) * static_cast<double>(i) /
                                static_cast<double>(bars));
    }
    path.back() = to;
    out.turning_bars.push_back(path.size() - 1);
  };

  double low = spec.start_price;
  for (std::size_t k = 0; k < spec.corrections; ++k) {
    const double high = low * (1.0 + spec.relative_movement);
    leg(high, spec.movement_bars);
    double x = draw_x(rng);
    while (!(x < x_cap)) x = draw_x(rng);
    out.retracements.push_back(x);
    const double next_low = high - x * (high - low);
    const auto bars = std::max<std::size_t>(
        spec.min_leg_bars,
        static_cast<std::size_t>(
            std::lround(x * static_cast<double>(spec.movement_bars))));
    leg(next_low, bars);
    low = next_low;
  }
  // Closing movement so the last correction's low gets detected.
  leg(low * (1.0 + spec.relative_movement), spec.movement_bars);

  std::vector<Candle> candles;
  candles.reserve(path.size());
  for (std::size_t t = 0; t < path.size(); ++t) {
    Candle c;
    c.timestamp = Timestamp::index(static_cast<std::int64_t>(t));
    c.open = t == 0 ? path[0] : path[t - 1];
    c.close = path[t];
    c.high = std::max(c.open, c.close);
    c.low = std::min(c.open, c.close);
    candles.push_back(c);
  }
  out.series = CandleSeries(spec.symbol, std::move(candles));
  return out;
}

}  // namespace dowtrend
