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

#include "dowtrend/trend.h"

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace dowtrend {
namespace {

// Strict: an equal low or high is not a continuation.
bool continues(Direction d, double later, double earlier) {
  return d == Direction::kUp ? later > earlier : later < earlier;
}

// Kind of the extremum that ends a movement (P2) in a trend of direction d.
ExtremumKind movement_end_kind(Direction d) {
  return d == Direction::kUp ? ExtremumKind::kHigh : ExtremumKind::kLow;
}

constexpr std::array<std::pair<TrendVariable, const char*>, 8> kVariableNames =
    {{{TrendVariable::kRetracement, "retracement"},
      {TrendVariable::kDuration, "duration"},
      {TrendVariable::kRelMovement, "rel-movement"},
      {TrendVariable::kRelCorrection, "rel-correction"},
      {TrendVariable::kDelayX, "delay-x"},
      {TrendVariable::kDelayM, "delay-m"},
      {TrendVariable::kDelayC, "delay-c"},
      {TrendVariable::kPeriodGap, "period-gap"}}};

}  // namespace

const char* to_string(Direction d) {
  return d == Direction::kUp ? "up" : "down";
}

const char* to_string(TrendVariable v) {
  for (const auto& [var, name] : kVariableNames) {
    if (var == v) return name;
  }
  return "unknown";
}

std::optional<TrendVariable> parse_trend_variable(std::string_view name) {
  for (const auto& [var, n] : kVariableNames) {
    if (name == n) return var;
  }
  return std::nullopt;
}

std::vector<TrendPhase> detect_trends(const MinMaxProcess& mm) {
  const auto& pts = mm.points;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].kind == pts[i - 1].kind) {
      throw std::invalid_argument("detect_trends: points do not alternate at " +
                                  std::to_string(i));
    }
  }

  std::vector<TrendPhase> phases;
  std::optional<TrendPhase> current;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (current) {
      if (continues(current->direction, pts[i].price, pts[i - 2].price)) {
        continue;
      }
      current->end_point_index = i;
      current->end_detection_bar = pts[i].detection_bar;
      current->completed = true;
      phases.push_back(*current);
      current.reset();
    }
    if (i < 3) continue;
    for (Direction d : {Direction::kUp, Direction::kDown}) {
      if (continues(d, pts[i].price, pts[i - 2].price) &&
          continues(d, pts[i - 1].price, pts[i - 3].price)) {
        TrendPhase phase;
        phase.direction = d;
        phase.start_point_index = i - 3;
        phase.established_point_index = i;
        phase.end_point_index = i;
        phase.start_detection_bar = pts[i].detection_bar;
        phase.end_detection_bar = pts[i].detection_bar;
        current = phase;
        break;
      }
    }
  }
  if (current) {
    current->end_point_index = pts.size() - 1;
    current->end_detection_bar = pts.back().detection_bar;
    current->completed = false;
    phases.push_back(*current);
  }
  return phases;
}

std::vector<PeriodGap> period_gaps(const MinMaxProcess& mm,
                                   std::span<const TrendPhase> phases) {
  const auto& pts = mm.points;
  std::vector<PeriodGap> gaps;
  std::set<std::pair<Direction, std::size_t>> seen;
  for (const TrendPhase& phase : phases) {
    for (std::size_t k = phase.start_point_index;
         k + 2 <= phase.end_point_index && k + 2 < pts.size(); ++k) {
      if (!seen.insert({phase.direction, k}).second) continue;
      gaps.push_back({phase.direction, k, pts[k + 2].bar - pts[k].bar});
    }
  }
  return gaps;
}

std::optional<double> mean_period(const MinMaxProcess& mm,
                                  std::span<const TrendPhase> phases,
                                  std::optional<Direction> direction) {
  std::set<std::size_t> seen;
  double sum = 0;
  std::size_t count = 0;
  for (const PeriodGap& gap : period_gaps(mm, phases)) {
    if (direction && gap.direction != *direction) continue;
    if (!seen.insert(gap.first_point_index).second) continue;
    sum += static_cast<double>(gap.bars);
    ++count;
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

SampleExtraction extract_samples(const MinMaxProcess& mm,
                                 std::span<const TrendPhase> phases,
                                 const CandleSeries& series, double scaling) {
  const auto& pts = mm.points;
  SampleExtraction out;
  auto emit = [&](TrendVariable var, double value, Direction dir,
                  std::size_t pair_id) {
    out.samples.push_back(
        TrendSample{var, value, dir, scaling, series.symbol(), pair_id});
  };

  for (const TrendPhase& phase : phases) {
    const Direction dir = phase.direction;
    const ExtremumKind p2_kind = movement_end_kind(dir);
    const double sign = dir == Direction::kUp ? 1.0 : -1.0;

    for (std::size_t j = phase.established_point_index;
         j <= phase.end_point_index && j < pts.size(); ++j) {
      if (pts[j].kind != p2_kind || j == 0) continue;
      const ExtremumPoint& p3 = pts[j - 1];
      const ExtremumPoint& p2 = pts[j];

      // Movement p3 -> p2, only if it started inside the phase.
      if (j - 1 >= phase.established_point_index) {
        const double move = sign * (p2.price - p3.price);
        if (move > 0) {
          emit(TrendVariable::kRelMovement, move / p3.price, dir, 2 * j + 1);
          if (p2.d_abs > 0) {
            emit(TrendVariable::kDelayM, relative_delay(p2, p3.price), dir,
                 2 * j + 1);
          } else {
            ++out.skipped_zero_delay;
          }
        } else {
          ++out.skipped_degenerate;
        }
      }

      // Correction p2 -> p3_new.
      if (j + 1 > phase.end_point_index || j + 1 >= pts.size()) continue;
      const ExtremumPoint& p3_new = pts[j + 1];
      const double move = sign * (p2.price - p3.price);
      const double corr = sign * (p2.price - p3_new.price);
      if (!(move > 0) || !(corr > 0)) {
        ++out.skipped_degenerate;
        continue;
      }
      const std::size_t id = 2 * (j + 1);
      emit(TrendVariable::kRetracement, corr / move, dir, id);
      emit(TrendVariable::kDuration,
           static_cast<double>(p3_new.bar - p2.bar), dir, id);
      emit(TrendVariable::kRelCorrection, corr / p2.price, dir, id);
      if (p3_new.d_abs > 0) {
        emit(TrendVariable::kDelayX, relative_delay(p3_new, move), dir, id);
        emit(TrendVariable::kDelayC, relative_delay(p3_new, p2.price), dir, id);
      } else {
        ++out.skipped_zero_delay;
      }
    }
  }

  for (const PeriodGap& gap : period_gaps(mm, phases)) {
    emit(TrendVariable::kPeriodGap, static_cast<double>(gap.bars),
         gap.direction, gap.first_point_index);
  }
  return out;
}

LinearFit period_scaling_fit(std::span<const ScalingPeriod> points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("period_scaling_fit: need >= 2 points");
  double mean_s = 0, mean_t = 0;
  for (const auto& p : points) {
    mean_s += p.scaling;
    mean_t += p.period;
  }
  mean_s /= static_cast<double>(n);
  mean_t /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (const auto& p : points) {
    sxx += (p.scaling - mean_s) * (p.scaling - mean_s);
    sxy += (p.scaling - mean_s) * (p.period - mean_t);
  }
  if (!(sxx > 0)) {
    throw std::invalid_argument("period_scaling_fit: all scalings identical");
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_t - fit.slope * mean_s;
  double ss = 0;
  for (const auto& p : points) {
    const double r = p.period - (fit.intercept + fit.slope * p.scaling);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

}  // namespace dowtrend
