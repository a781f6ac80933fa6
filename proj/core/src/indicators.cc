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

#include "dowtrend/indicators.h"

#include <cmath>
#include <stdexcept>

namespace dowtrend {

ScalingConfig::ScalingConfig(double scaling) : scaling_(scaling) {
  if (!(scaling > 0) || !std::isfinite(scaling)) {
    throw std::invalid_argument("scaling must be positive and finite");
  }
}

std::size_t ScalingConfig::warmup() const {
  return static_cast<std::size_t>(std::ceil(slow()));
}

std::vector<double> ema(std::span<const double> values, double period) {
  if (values.empty()) throw std::invalid_argument("ema: empty input");
  if (!(period >= 1)) throw std::invalid_argument("ema: period < 1");
  const double alpha = 2.0 / (period + 1.0);
  std::vector<double> out(values.size());
  out[0] = values[0];
  for (std::size_t t = 1; t < values.size(); ++t) {
    out[t] = alpha * values[t] + (1.0 - alpha) * out[t - 1];
  }
  return out;
}

MacdLines macd(const CandleSeries& series, const ScalingConfig& cfg) {
  const std::vector<double> close = series.closes();
  const std::vector<double> fast = ema(close, cfg.fast());
  const std::vector<double> slow = ema(close, cfg.slow());
  MacdLines out;
  out.macd.resize(close.size());
  for (std::size_t t = 0; t < close.size(); ++t) {
    out.macd[t] = fast[t] - slow[t];
  }
  out.signal = ema(out.macd, cfg.signal());
  return out;
}

SarSeries macd_sar(const CandleSeries& series, const ScalingConfig& cfg) {
  const MacdLines lines = macd(series, cfg);
  SarSeries sar;
  sar.values.assign(series.size(), Sar::kUndefined);
  Sar prev = Sar::kDown;
  for (std::size_t t = cfg.warmup(); t < series.size(); ++t) {
    if (lines.macd[t] > lines.signal[t]) {
      prev = Sar::kUp;
    } else if (lines.macd[t] < lines.signal[t]) {
      prev = Sar::kDown;
    }
    sar.values[t] = prev;
  }
  return sar;
}

}  // namespace dowtrend
