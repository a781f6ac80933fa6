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

#include "dowtrend/trading.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dowtrend/indicators.h"
#include "dowtrend/minmax.h"

namespace dowtrend {

TradeSpec::TradeSpec(double entry, double target)
    : entry_(entry), target_(target) {
  if (!(entry > 0) || !(entry < target) || !std::isfinite(target)) {
    throw std::invalid_argument("trade spec: need 0 < entry < target");
  }
}

std::optional<TradeOutcome> trade_return(double x, double d,
                                         const TradeSpec& spec) {
  if (!(d >= 0)) throw std::invalid_argument("trade_return: d must be >= 0");
  if (!(x >= spec.entry())) return std::nullopt;
  TradeOutcome out;
  out.x = x;
  out.d = d;
  if (x >= spec.target()) {
    out.ret = spec.target() - spec.entry();
    out.reached_target = true;
  } else {
    out.ret = x - spec.entry() - d;
  }
  return out;
}

ExpectedReturn expected_return_detail(const BivariateLogNormalParams& params,
                                      const TradeSpec& spec) {
  validate(params);
  const double a = spec.entry();
  const double t = spec.target();
  const LogNormalParams px = params.x();

  ExpectedReturn r;
  r.open_probability = lognormal_survival(a, px);
  r.no_target_value = truncated_lognormal_mean(px, a) - a -
                      conditional_cross_mean(params, a);
  r.value = r.no_target_value;

  const double survival_t = lognormal_survival(t, px);
  if (survival_t >= kMinSurvival) {
    r.target_probability = survival_t / r.open_probability;
    r.value += r.target_probability * (t + conditional_cross_mean(params, t) -
                                       truncated_lognormal_mean(px, t));
  }
  return r;
}

double expected_return(const BivariateLogNormalParams& params,
                       const TradeSpec& spec) {
  return expected_return_detail(params, spec).value;
}

MonteCarloEstimate simulate_expected_return(
    const BivariateLogNormalParams& params, const TradeSpec& spec,
    std::size_t n, std::uint64_t seed) {
  validate(params);
  if (n < kMinSimulationDraws) {
    throw std::invalid_argument("simulate_expected_return: need n >= 10000");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double cross = std::sqrt(1.0 - params.rho * params.rho);

  // Welford running mean / variance over accepted draws.
  MonteCarloEstimate est;
  est.draws = n;
  double mean = 0, m2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z1 = gauss(rng);
    const double z2 = gauss(rng);
    const double x = std::exp(params.mu_x + params.sigma_x * z1);
    const double d =
        std::exp(params.mu_d + params.sigma_d * (params.rho * z1 + cross * z2));
    const auto outcome = trade_return(x, d, spec);
    if (!outcome) continue;
    ++est.accepted;
    const double delta = outcome->ret - mean;
    mean += delta / static_cast<double>(est.accepted);
    m2 += delta * (outcome->ret - mean);
  }
  if (est.accepted < kMinAcceptedDraws) {
    throw std::runtime_error(
        "simulate_expected_return: fewer than 100 draws opened a trade");
  }
  const double k = static_cast<double>(est.accepted);
  est.mean = mean;
  est.std_error = std::sqrt(m2 / (k - 1.0) / k);
  return est;
}

BacktestResult backtest_anticyclic(const CandleSeries& series,
                                   const MinMaxProcess& mm,
                                   std::span<const TrendPhase> phases,
                                   const TradeSpec& spec,
                                   const BacktestOptions& options) {
  const auto& pts = mm.points;
  BacktestResult result;
  for (const TrendPhase& phase : phases) {
    const Direction dir = phase.direction;
    if (dir == Direction::kUp && !options.up_trends) continue;
    if (dir == Direction::kDown && !options.down_trends) continue;
    // Up-trend corrections are traded short, down-trend ones long.
    const double sign = dir == Direction::kUp ? 1.0 : -1.0;
    const ExtremumKind p2_kind =
        dir == Direction::kUp ? ExtremumKind::kHigh : ExtremumKind::kLow;

    for (std::size_t j = phase.established_point_index;
         j <= phase.end_point_index && j < pts.size(); ++j) {
      if (pts[j].kind != p2_kind || j == 0) continue;
      const bool has_end = j + 1 < pts.size();
      if (has_end && j + 1 > phase.end_point_index) continue;
      if (!has_end && phase.completed) continue;

      const ExtremumPoint& p3 = pts[j - 1];
      const ExtremumPoint& p2 = pts[j];
      const double move = sign * (p2.price - p3.price);
      if (!(move > 0)) continue;

      const double entry_price = p2.price - sign * spec.entry() * move;
      const double target_price = p2.price - sign * spec.target() * move;
      // Price reached `level` in the trade's favourable direction.
      auto touches = [&](const Candle& c, double level) {
        return dir == Direction::kUp ? c.low <= level : c.high >= level;
      };

      const std::size_t last =
          has_end ? pts[j + 1].detection_bar : series.size() - 1;
      std::optional<BacktestTrade> open;
      bool closed = false;
      for (std::size_t i = p2.bar + 1; i <= last && !closed; ++i) {
        const Candle& c = series[i];
        if (!open) {
          if (!touches(c, entry_price)) continue;
          BacktestTrade trade;
          trade.direction = dir;
          trade.entry_bar = i;
          trade.entry_price = entry_price;
          open = trade;
        }
        if (touches(c, target_price)) {
          open->exit_bar = i;
          open->exit_price = target_price;
          open->outcome.reached_target = true;
          open->outcome.ret = spec.target() - spec.entry();
          closed = true;
        }
      }
      if (!open) continue;
      if (!has_end) {
        if (!closed) {
          ++result.truncated;
          continue;
        }
      } else {
        const ExtremumPoint& p3_new = pts[j + 1];
        open->outcome.x = sign * (p2.price - p3_new.price) / move;
        open->outcome.d = p3_new.d_abs / move;
        if (!closed) {
          open->exit_bar = p3_new.detection_bar;
          open->exit_price = series[p3_new.detection_bar].close;
          open->outcome.ret =
              sign * (open->entry_price - open->exit_price) / move;
        }
      }
      result.trades.push_back(*open);
    }
  }
  return result;
}

BacktestResult backtest_anticyclic(const CandleSeries& series, double scaling,
                                   const TradeSpec& spec,
                                   const BacktestOptions& options) {
  const MinMaxProcess mm = run_minmax(series, ScalingConfig(scaling));
  const std::vector<TrendPhase> phases = detect_trends(mm);
  return backtest_anticyclic(series, mm, phases, spec, options);
}

}  // namespace dowtrend
