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

// MinMax-process: the alternating sequence of relevant highs and lows of a
// chart, steered by a SAR series and built causally bar by bar.
//
// While a high is being searched the candidate is the running maximum of
// candle highs; a low search tracks the running minimum of candle lows. A
// candidate becomes a fixed extremum when
//
//   * the SAR turns against the search (down while searching a high, up
//     while searching a low). The flip bar itself still belongs to the
//     search, so an extremum may be detected on its own bar; or
//   * the opposite side breaks: during a high search a candle low falls
//     below the last fixed low (mirrored for low searches). The breaking bar
//     is not part of the fixed candidate's window.
//
// After a point is fixed, the opposite search covers every bar after the
// fixed point's bar up to and including the detection bar, and continues
// from there.
//
// Bootstrapping: on the first bar with a defined SAR value t0 the search
// starts in the SAR direction, after the opposite extreme of bars [0, t0]
// (the lowest low if the SAR points up, the highest high if it points
// down). That opposite extreme stays pending, following any later bar that
// goes beyond it, and is fixed together with the first candidate on the
// first SAR turn. A SAR that never turns therefore fixes no point.
//
// Ties keep the earliest bar.

#ifndef DOWTREND_MINMAX_H_
#define DOWTREND_MINMAX_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dowtrend/indicators.h"
#include "dowtrend/market_data.h"

namespace dowtrend {

enum class ExtremumKind : std::uint8_t { kHigh, kLow };

constexpr ExtremumKind opposite(ExtremumKind k) {
  return k == ExtremumKind::kHigh ? ExtremumKind::kLow : ExtremumKind::kHigh;
}

const char* to_string(ExtremumKind k);

enum class FixReason : std::uint8_t {
  kInitial,       // warm-up extreme, fixed on the first SAR turn
  kSarFlip,       // SAR turned against the search
  kOppositeBreak  // last fixed opposite extremum was violated
};

const char* to_string(FixReason r);

struct ExtremumPoint {
  ExtremumKind kind = ExtremumKind::kHigh;
  double price = 0;
  std::size_t bar = 0;
  std::size_t detection_bar = 0;
  double detection_close = 0;
  // |price - detection_close|
  double d_abs = 0;
  FixReason reason = FixReason::kSarFlip;

  friend bool operator==(const ExtremumPoint&, const ExtremumPoint&) = default;
};

struct Candidate {
  ExtremumKind kind = ExtremumKind::kHigh;
  double price = 0;
  std::size_t bar = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct MinMaxProcess {
  std::vector<ExtremumPoint> points;
  std::optional<Candidate> open_candidate;
};

// Throws std::invalid_argument if sar is not aligned with series or if an
// undefined SAR value follows a defined one.
MinMaxProcess run_minmax(const CandleSeries& series, const SarSeries& sar);

// Convenience: macd_sar followed by run_minmax.
MinMaxProcess run_minmax(const CandleSeries& series, const ScalingConfig& cfg);

// d_abs / denom. Throws std::invalid_argument unless denom > 0.
double relative_delay(const ExtremumPoint& point, double denom);

}  // namespace dowtrend

#endif  // DOWTREND_MINMAX_H_
