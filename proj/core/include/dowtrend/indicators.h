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

// EMA, MACD and the two-valued MACD stop-and-reverse (SAR) process.
//
// A single scaling parameter s drives all three MACD periods through the
// standard 12/26/9 ratios, so s = 2 is the classic (24/52/18) MACD. Periods
// may be non-integer; the EMA smoothing factor is 2 / (period + 1) either way.

#ifndef DOWTREND_INDICATORS_H_
#define DOWTREND_INDICATORS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dowtrend/market_data.h"

namespace dowtrend {

class ScalingConfig {
 public:
  static constexpr double kFastBase = 12.0;
  static constexpr double kSlowBase = 26.0;
  static constexpr double kSignalBase = 9.0;

  // Throws std::invalid_argument unless scaling > 0 and finite.
  explicit ScalingConfig(double scaling = 1.0);

  double scaling() const { return scaling_; }
  double fast() const { return kFastBase * scaling_; }
  double slow() const { return kSlowBase * scaling_; }
  double signal() const { return kSignalBase * scaling_; }

  // Bars at the start of a series for which the SAR stays undefined:
  // ceil(26 * s).
  std::size_t warmup() const;

 private:
  double scaling_;
};

enum class Sar : std::int8_t { kDown = -1, kUndefined = 0, kUp = 1 };

// Aligned index-for-index with the source series. Undefined only in the
// leading warm-up prefix.
struct SarSeries {
  std::vector<Sar> values;

  std::size_t size() const { return values.size(); }
  Sar operator[](std::size_t i) const { return values[i]; }
};

// e[0] = v[0], e[t] = a * v[t] + (1 - a) * e[t-1], a = 2 / (period + 1).
// Throws std::invalid_argument on empty input or period < 1.
std::vector<double> ema(std::span<const double> values, double period);

struct MacdLines {
  std::vector<double> macd;    // ema(close, fast) - ema(close, slow)
  std::vector<double> signal;  // ema(macd, signal)
};

MacdLines macd(const CandleSeries& series, const ScalingConfig& cfg);

// +1 when macd > signal, -1 when macd < signal, previous value on a tie (the
// first defined value defaults to -1 on a tie). Undefined during warm-up.
SarSeries macd_sar(const CandleSeries& series, const ScalingConfig& cfg);

}  // namespace dowtrend

#endif  // DOWTREND_INDICATORS_H_
