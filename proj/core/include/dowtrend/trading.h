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

// Anti-cyclic trade on trend corrections.
//
// In an up-trend the position is opened against the trend once the
// correction has retraced a fraction `entry` of the preceding movement and is
// closed either at the retracement level `target`, or, if the correction ends
// first, at the close of the bar on which the correction's low is detected.
// All returns are expressed in units of the preceding movement:
//
//   R(x, d) = x - a - d   if a <= x < t
//           = t - a       if x >= t

#ifndef DOWTREND_TRADING_H_
#define DOWTREND_TRADING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dowtrend/market_data.h"
#include "dowtrend/stats.h"
#include "dowtrend/trend.h"

namespace dowtrend {

class TradeSpec {
 public:
  // Throws std::invalid_argument unless 0 < entry < target.
  TradeSpec(double entry, double target);

  double entry() const { return entry_; }
  double target() const { return target_; }

 private:
  double entry_;
  double target_;
};

struct TradeOutcome {
  double ret = 0;
  bool reached_target = false;
  double x = 0;
  double d = 0;
};

// nullopt when x < entry (no trade was opened). Throws std::invalid_argument
// for d < 0.
std::optional<TradeOutcome> trade_return(double x, double d,
                                         const TradeSpec& spec);

struct ExpectedReturn {
  double value = 0;                // E(R | X >= a)
  double open_probability = 0;     // 1 - F_X(a)
  double target_probability = 0;   // (1 - F_X(t)) / (1 - F_X(a))
  double no_target_value = 0;      // E(X|X>=a) - a - E(D|X>=a)
};

// Closed form of E(R | X >= a):
//
//   E(X|X>=a) - (a + E(D|X>=a))
//     + (1 - F(t)) / (1 - F(a)) * [t + E(D|X>=t) - E(X|X>=t)]
//
// When 1 - F(t) underflows the bracket carries zero weight and is dropped.
// Throws TailTooDeepError if 1 - F(a) underflows.
ExpectedReturn expected_return_detail(const BivariateLogNormalParams& params,
                                      const TradeSpec& spec);
double expected_return(const BivariateLogNormalParams& params,
                       const TradeSpec& spec);

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t accepted = 0;
  std::size_t draws = 0;
};

inline constexpr std::size_t kMinSimulationDraws = 10'000;
inline constexpr std::size_t kMinAcceptedDraws = 100;

// Draws (X, D) by exponentiating correlated normals and averages
// trade_return over the draws with X >= a. Deterministic per seed. Throws
// std::invalid_argument for n < 1e4 and std::runtime_error when fewer than
// 100 draws open a trade.
MonteCarloEstimate simulate_expected_return(
    const BivariateLogNormalParams& params, const TradeSpec& spec,
    std::size_t n, std::uint64_t seed);

struct BacktestOptions {
  bool up_trends = true;
  bool down_trends = false;
};

struct BacktestTrade {
  Direction direction = Direction::kUp;
  std::size_t entry_bar = 0;
  std::size_t exit_bar = 0;
  double entry_price = 0;
  double exit_price = 0;
  TradeOutcome outcome;
};

struct BacktestResult {
  std::vector<BacktestTrade> trades;
  // Trades opened but still running when the series ended.
  std::size_t truncated = 0;
};

// Replays the anti-cyclic system over every in-trend correction found by
// the MACD-SAR MinMax pipeline at the given scaling. Entries fill at the
// entry level with no slippage; when entry and target fall in the same bar,
// entry fills first. A target fill exits without delay.
BacktestResult backtest_anticyclic(const CandleSeries& series, double scaling,
                                   const TradeSpec& spec,
                                   const BacktestOptions& options = {});

// Same, on an already computed MinMax-process and its trend phases.
BacktestResult backtest_anticyclic(const CandleSeries& series,
                                   const MinMaxProcess& mm,
                                   std::span<const TrendPhase> phases,
                                   const TradeSpec& spec,
                                   const BacktestOptions& options = {});

}  // namespace dowtrend

#endif  // DOWTREND_TRADING_H_
