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

// Dow-trend state machine over a MinMax-process and the trend variables
// measured inside each trend.
//
// Naming follows the up-trend picture: P3 is the low a movement starts from,
// P2 the high it reaches and P3_new the low that ends the following
// correction. Down-trends mirror everything.
//
//   retracement    X   = |P2 - P3_new| / |P2 - P3|
//   rel. movement  M   = |P2 - P3| / P3
//   rel. correction C  = |P2 - P3_new| / P2
//   duration       Y   = bar(P3_new) - bar(P2)
//   delays         D_X = d_abs(P3_new) / |P2 - P3|
//                  D_M = d_abs(P2) / P3
//                  D_C = d_abs(P3_new) / P2

#ifndef DOWTREND_TREND_H_
#define DOWTREND_TREND_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dowtrend/market_data.h"
#include "dowtrend/minmax.h"

namespace dowtrend {

enum class Direction : std::uint8_t { kUp, kDown };

const char* to_string(Direction d);

struct TrendPhase {
  Direction direction = Direction::kUp;
  // First of the four points that define the trend.
  std::size_t start_point_index = 0;
  // Point whose detection established the trend.
  std::size_t established_point_index = 0;
  // Point whose detection ended the trend (or the last point if still open).
  std::size_t end_point_index = 0;
  std::size_t start_detection_bar = 0;
  std::size_t end_detection_bar = 0;
  // False when the series ended while the trend was still intact.
  bool completed = false;

  friend bool operator==(const TrendPhase&, const TrendPhase&) = default;
};

enum class TrendVariable : std::uint8_t {
  kRetracement,
  kDuration,
  kRelMovement,
  kRelCorrection,
  kDelayX,
  kDelayM,
  kDelayC,
  kPeriodGap,
};

// CLI spelling: retracement, duration, rel-movement, rel-correction,
// delay-x, delay-m, delay-c, period-gap.
const char* to_string(TrendVariable v);
std::optional<TrendVariable> parse_trend_variable(std::string_view name);

struct TrendSample {
  TrendVariable variable = TrendVariable::kRetracement;
  double value = 0;
  Direction direction = Direction::kUp;
  double scaling = 0;
  std::string symbol;
  // Samples measured on the same correction (X, Y, C, D_X, D_C) or the same
  // movement (M, D_M) share a pair id within one series.
  std::size_t pair_id = 0;
};

struct SampleExtraction {
  std::vector<TrendSample> samples;
  // Movements or corrections skipped because a ratio came out <= 0.
  std::size_t skipped_degenerate = 0;
  // Delay samples omitted because the detection close equalled the
  // extremum (d_abs == 0 has no log-normal likelihood).
  std::size_t skipped_zero_delay = 0;
};

// Throws std::invalid_argument if the points do not alternate.
std::vector<TrendPhase> detect_trends(const MinMaxProcess& mm);

// Emits X, Y, C, D_X, D_C for every correction and M, D_M for every
// movement that starts at or after the establishing point of a phase and
// ends no later than its end point (so the correction that breaks a trend is
// still measured). Also emits one kPeriodGap sample per in-trend pair of
// consecutive same-kind extrema.
SampleExtraction extract_samples(const MinMaxProcess& mm,
                                 std::span<const TrendPhase> phases,
                                 const CandleSeries& series, double scaling);

struct PeriodGap {
  Direction direction = Direction::kUp;
  std::size_t first_point_index = 0;
  std::size_t bars = 0;
};

// Bar distances between consecutive same-kind extrema (k, k+2) with both
// points inside [start_point_index, end_point_index] of a phase. A pair
// shared by two phases of the same direction is counted once.
std::vector<PeriodGap> period_gaps(const MinMaxProcess& mm,
                                   std::span<const TrendPhase> phases);

// Arithmetic mean of period_gaps, optionally restricted to one direction;
// nullopt when no pair qualifies.
std::optional<double> mean_period(const MinMaxProcess& mm,
                                  std::span<const TrendPhase> phases,
                                  std::optional<Direction> direction = {});

struct ScalingPeriod {
  double scaling = 0;
  double period = 0;
};

struct LinearFit {
  double intercept = 0;
  double slope = 0;
  double residual_rms = 0;
};

// Ordinary least squares period = intercept + slope * scaling. Throws
// std::invalid_argument with fewer than two distinct scalings.
LinearFit period_scaling_fit(std::span<const ScalingPeriod> points);

}  // namespace dowtrend

#endif  // DOWTREND_TREND_H_
