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

// Hand-built charts shared by the unit tests, the acceptance suite and the
// CLI tests. Expected values next to each chart were worked out by hand
// from the chart definition, not by running the library.

#ifndef DOWTREND_TESTS_SUPPORT_FIXTURES_H_
#define DOWTREND_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dowtrend/indicators.h"
#include "dowtrend/market_data.h"
#include "dowtrend/minmax.h"
#include "dowtrend/trend.h"

namespace dowtrend::testing {

// Candles whose close follows `path`; each bar opens at the previous close
// and its wicks are the body.
CandleSeries chart_from_closes(const std::vector<double>& path,
                               const std::string& symbol = "FIXTURE");

// Piecewise-linear path through (bar, price) knots, one value per bar.
std::vector<double> piecewise_path(
    const std::vector<std::pair<std::size_t, double>>& knots);

// SAR series from run lengths: `undefined` leading bars, then alternating
// runs starting with `first`.
SarSeries sar_from_runs(std::size_t undefined, Sar first,
                        const std::vector<std::size_t>& runs);

// Independent EMA / MACD SAR used as an oracle for the library indicators.
std::vector<double> reference_ema(const std::vector<double>& v, double period);
std::vector<int> reference_sar(const std::vector<double>& closes,
                               double scaling);

// --- Zig-zag chart with a hand-written SAR -------------------------------
//
// Slope 1 per bar between the knots
//   (0,100) (10,110) (15,105) (25,115) (32,108) (44,120) (58,106)
//   (70,118) (88,100) (100,112) (117,95) (120,98)
// and SAR runs: 3 undefined, then +1 x9, -1 x4, +1 x12, -1 x6, +1 x11,
// -1 x16, +1 x11, -1 x18, +1 x11, -1 x18, +1 x2.
struct ExpectedSample {
  TrendVariable variable;
  Direction direction;
  double value;
};

struct HandSarFixture {
  CandleSeries series;
  SarSeries sar;
  std::vector<ExtremumPoint> points;
  Candidate open_candidate;
  std::vector<TrendPhase> phases;
  // In emission order: per phase, per point, movement before correction;
  // period gaps last.
  std::vector<ExpectedSample> samples;
};
HandSarFixture hand_sar_fixture();

// --- Rise, fall, rise chart driven by the real MACD SAR ------------------
//
// Closes 100 -> 120 over bars 0-20, down to 104 at bar 40, up to 130 at
// bar 70.
CandleSeries rise_fall_rise_chart();

// --- Opposite-extremum break -----------------------------------------------
//
// Slope-1 legs except the fall (0,100) (10,110) (16,104) (22,112) (40,90)
// (50,100); SAR: 2 undefined, +1 x10, -1 x6, +1 x12, -1 x15, +1 x6. The fall
// from 112 first trades below 104 at bar 29
// (112 - 7.5 * 22/18 < 104 < 112 - 6.5 * 22/18), while the SAR is still up,
// so the 112 high is fixed by the break.
struct MinMaxFixture {
  CandleSeries series;
  SarSeries sar;
  std::vector<ExtremumPoint> points;
  Candidate open_candidate;
};
MinMaxFixture opposite_break_fixture();

}  // namespace dowtrend::testing

#endif  // DOWTREND_TESTS_SUPPORT_FIXTURES_H_
