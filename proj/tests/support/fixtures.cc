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

#include "support/fixtures.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dowtrend::testing {

CandleSeries chart_from_closes(const std::vector<double>& path,
                               const std::string& symbol) {
  std::vector<Candle> candles;
  for (std::size_t t = 0; t < path.size(); ++t) {
    Candle c;
    c.timestamp = Timestamp::index(static_cast<std::int64_t>(t));
    c.open = t == 0 ? path[0] : path[t - 1];
    c.close = path[t];
    c.high = std::max(c.open, c.close);
    c.low = std::min(c.open, c.close);
    candles.push_back(c);
  }
  return CandleSeries(symbol, std::move(candles));
}

std::vector<double> piecewise_path(
    const std::vector<std::pair<std::size_t, double>>& knots) {
  std::vector<double> path{knots.front().second};
  for (std::size_t k = 1; k < knots.size(); ++k) {
    const auto [b0, p0] = knots[k - 1];
    const auto [b1, p1] = knots[k];
    for (std::size_t t = b0 + 1; t <= b1; ++t) {
      path.push_back(p0 + (p1 - p0) * static_cast<double>(t - b0) /
                              static_cast<double>(b1 - b0));
    }
  }
  return path;
}

SarSeries sar_from_runs(std::size_t undefined, Sar first,
                        const std::vector<std::size_t>& runs) {
  SarSeries sar;
  sar.values.assign(undefined, Sar::kUndefined);
  Sar s = first;
  for (std::size_t run : runs) {
    sar.values.insert(sar.values.end(), run, s);
    s = s == Sar::kUp ? Sar::kDown : Sar::kUp;
  }
  return sar;
}

std::vector<double> reference_ema(const std::vector<double>& v,
                                  double period) {
  const double k = 2.0 / (period + 1.0);
  std::vector<double> out(v.size());
  double state = v[0];
  for (std::size_t i = 0; i < v.size(); ++i) {
    state = i == 0 ? v[0] : state + k * (v[i] - state);
    out[i] = state;
  }
  return out;
}

std::vector<int> reference_sar(const std::vector<double>& closes,
                               double scaling) {
  const auto fast = reference_ema(closes, 12 * scaling);
  const auto slow = reference_ema(closes, 26 * scaling);
  std::vector<double> line(closes.size());
  for (std::size_t i = 0; i < closes.size(); ++i) line[i] = fast[i] - slow[i];
  const auto signal = reference_ema(line, 9 * scaling);
  const auto warmup = static_cast<std::size_t>(std::ceil(26 * scaling));
  std::vector<int> out(closes.size(), 0);
  int last = -1;
  for (std::size_t i = warmup; i < closes.size(); ++i) {
    if (line[i] > signal[i]) last = 1;
    if (line[i] < signal[i]) last = -1;
    out[i] = last;
  }
  return out;
}

HandSarFixture hand_sar_fixture() {
  using K = ExtremumKind;
  using R = FixReason;
  HandSarFixture f;
  f.series = chart_from_closes(piecewise_path({{0, 100},
                                               {10, 110},
                                               {15, 105},
                                               {25, 115},
                                               {32, 108},
                                               {44, 120},
                                               {58, 106},
                                               {70, 118},
                                               {88, 100},
                                               {100, 112},
                                               {117, 95},
                                               {120, 98}}),
                               "HANDSAR");
  f.sar = sar_from_runs(3, Sar::kUp,
                        {9, 4, 12, 6, 11, 16, 11, 18, 11, 18, 2});

  // Each extremum is the first bar of its plateau (the next bar's wick
  // touches the same price). Detection closes sit on the slope-1 legs.
  f.points = {
      {K::kLow, 100, 0, 12, 108, 8, R::kInitial},
      {K::kHigh, 110, 10, 12, 108, 2, R::kSarFlip},
      {K::kLow, 105, 15, 16, 106, 1, R::kSarFlip},
      {K::kHigh, 115, 25, 28, 112, 3, R::kSarFlip},
      {K::kLow, 108, 32, 34, 110, 2, R::kSarFlip},
      {K::kHigh, 120, 44, 45, 119, 1, R::kSarFlip},
      {K::kLow, 106, 58, 61, 109, 3, R::kSarFlip},
      {K::kHigh, 118, 70, 72, 116, 2, R::kSarFlip},
      {K::kLow, 100, 88, 90, 102, 2, R::kSarFlip},
      {K::kHigh, 112, 100, 101, 111, 1, R::kSarFlip},
      {K::kLow, 95, 117, 119, 97, 2, R::kSarFlip},
  };
  f.open_candidate = {K::kHigh, 98, 120};

  // Up: lows 100 < 105, highs 110 < 115 at point 3; low 106 < 108 at
  // point 6 breaks it. Down: highs 120 > 118, lows 108 > 106 at point 7;
  // still intact at the last point.
  f.phases = {
      {Direction::kUp, 0, 3, 6, 28, 61, true},
      {Direction::kDown, 4, 7, 10, 72, 119, false},
  };

  using V = TrendVariable;
  const Direction up = Direction::kUp;
  const Direction down = Direction::kDown;
  f.samples = {
      // Up: correction 115 -> 108 after movement 105 -> 115.
      {V::kRetracement, up, 7.0 / 10.0},
      {V::kDuration, up, 7},
      {V::kRelCorrection, up, 7.0 / 115.0},
      {V::kDelayX, up, 2.0 / 10.0},
      {V::kDelayC, up, 2.0 / 115.0},
      // Up: movement 108 -> 120, then correction 120 -> 106 (breaks trend).
      {V::kRelMovement, up, 12.0 / 108.0},
      {V::kDelayM, up, 1.0 / 108.0},
      {V::kRetracement, up, 14.0 / 12.0},
      {V::kDuration, up, 14},
      {V::kRelCorrection, up, 14.0 / 120.0},
      {V::kDelayX, up, 3.0 / 12.0},
      {V::kDelayC, up, 3.0 / 120.0},
      // Down: movement 118 -> 100, correction 100 -> 112.
      {V::kRelMovement, down, 18.0 / 118.0},
      {V::kDelayM, down, 2.0 / 118.0},
      {V::kRetracement, down, 12.0 / 18.0},
      {V::kDuration, down, 12},
      {V::kRelCorrection, down, 12.0 / 100.0},
      {V::kDelayX, down, 1.0 / 18.0},
      {V::kDelayC, down, 1.0 / 100.0},
      // Down: movement 112 -> 95; its correction is still open.
      {V::kRelMovement, down, 17.0 / 112.0},
      {V::kDelayM, down, 2.0 / 112.0},
      // Same-kind gaps: lows 0-15-32-58, highs 10-25-44 in the up phase;
      // lows 32-58-88-117, highs 44-70-100 in the down phase.
      {V::kPeriodGap, up, 15},
      {V::kPeriodGap, up, 15},
      {V::kPeriodGap, up, 17},
      {V::kPeriodGap, up, 19},
      {V::kPeriodGap, up, 26},
      {V::kPeriodGap, down, 26},
      {V::kPeriodGap, down, 26},
      {V::kPeriodGap, down, 30},
      {V::kPeriodGap, down, 30},
      {V::kPeriodGap, down, 29},
  };
  return f;
}

CandleSeries rise_fall_rise_chart() {
  return chart_from_closes(
      piecewise_path({{0, 100}, {20, 120}, {40, 104}, {70, 130}}), "RFR");
}

MinMaxFixture opposite_break_fixture() {
  const auto path = piecewise_path(
      {{0, 100}, {10, 110}, {16, 104}, {22, 112}, {40, 90}, {50, 100}});
  using K = ExtremumKind;
  using R = FixReason;
  MinMaxFixture f;
  f.series = chart_from_closes(path, "OPPBREAK");
  f.sar = sar_from_runs(2, Sar::kUp, {10, 6, 12, 15, 6});
  f.points = {
      {K::kLow, 100, 0, 12, 108, 8, R::kInitial},
      {K::kHigh, 110, 10, 12, 108, 2, R::kSarFlip},
      {K::kLow, 104, 16, 18, path[18], path[18] - 104, R::kSarFlip},
      {K::kHigh, 112, 22, 29, path[29], 112 - path[29], R::kOppositeBreak},
      {K::kLow, 90, 40, 45, 95, 5, R::kSarFlip},
  };
  f.open_candidate = {K::kHigh, 100, 50};
  return f;
}

}  // namespace dowtrend::testing
