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

#include "dowtrend/minmax.h"

#include <cmath>
#include <stdexcept>

namespace dowtrend {
namespace {

double extreme_price(const Candle& c, ExtremumKind kind) {
  return kind == ExtremumKind::kHigh ? c.high : c.low;
}

bool improves(ExtremumKind kind, double price, double current) {
  return kind == ExtremumKind::kHigh ? price > current : price < current;
}

class Sweep {
 public:
  explicit Sweep(const CandleSeries& series) : series_(series) {}

  void step(std::size_t t, Sar s) {
    if (s == Sar::kUndefined) {
      if (searching_) {
        throw std::invalid_argument("run_minmax: undefined SAR after warm-up");
      }
      return;
    }
    if (!searching_) {
      bootstrap(t, s);
    } else if (turns_against(s)) {
      extend(t);
      if (pending_) {
        record(*pending_, t, FixReason::kInitial);
        pending_.reset();
      }
      fix(t, FixReason::kSarFlip);
    } else if (pending_ && moves_pending(t)) {
      pending_ = Candidate{pending_->kind,
                           extreme_price(series_[t], pending_->kind), t};
      candidate_.reset();
    } else if (!pending_ && candidate_ && breaks_opposite(t)) {
      fix(t, FixReason::kOppositeBreak);
    } else {
      extend(t);
    }
    prev_ = s;
  }

  MinMaxProcess finish() && {
    out_.open_candidate = candidate_;
    return std::move(out_);
  }

 private:
  // The warm-up extreme opposite to the first SAR direction is held back
  // until the first regular fix, so a SAR that never turns fixes nothing.
  void bootstrap(std::size_t t, Sar s) {
    searching_ = s == Sar::kUp ? ExtremumKind::kHigh : ExtremumKind::kLow;
    pending_ = scan(opposite(*searching_), 0, t);
    candidate_ =
        pending_->bar < t ? scan(*searching_, pending_->bar + 1, t) : std::nullopt;
  }

  bool moves_pending(std::size_t t) const {
    const double p = extreme_price(series_[t], pending_->kind);
    return improves(pending_->kind, p, pending_->price);
  }

  bool turns_against(Sar s) const {
    if (*searching_ == ExtremumKind::kHigh) {
      return s == Sar::kDown && prev_ == Sar::kUp;
    }
    return s == Sar::kUp && prev_ == Sar::kDown;
  }

  bool breaks_opposite(std::size_t t) const {
    if (out_.points.empty()) return false;
    const ExtremumPoint& last = out_.points.back();
    const double p = extreme_price(series_[t], last.kind);
    return improves(last.kind, p, last.price);
  }

  void extend(std::size_t t) {
    const double p = extreme_price(series_[t], *searching_);
    if (!candidate_ || improves(*searching_, p, candidate_->price)) {
      candidate_ = Candidate{*searching_, p, t};
    }
  }

  // Earliest extreme over bars [from, to]; empty range gives nullopt.
  std::optional<Candidate> scan(ExtremumKind kind, std::size_t from,
                                std::size_t to) const {
    std::optional<Candidate> best;
    for (std::size_t i = from; i <= to; ++i) {
      const double p = extreme_price(series_[i], kind);
      if (!best || improves(kind, p, best->price)) best = Candidate{kind, p, i};
    }
    return best;
  }

  void record(const Candidate& c, std::size_t t, FixReason reason) {
    ExtremumPoint point;
    point.kind = c.kind;
    point.price = c.price;
    point.bar = c.bar;
    point.detection_bar = t;
    point.detection_close = series_[t].close;
    point.d_abs = std::abs(point.price - point.detection_close);
    point.reason = reason;
    out_.points.push_back(point);
  }

  void fix(std::size_t t, FixReason reason) {
    record(*candidate_, t, reason);
    const ExtremumPoint& point = out_.points.back();
    searching_ = opposite(point.kind);
    candidate_ = scan(*searching_, point.bar + 1, t);
  }

  const CandleSeries& series_;
  MinMaxProcess out_;
  std::optional<ExtremumKind> searching_;
  std::optional<Candidate> candidate_;
  std::optional<Candidate> pending_;
  Sar prev_ = Sar::kUndefined;
};

}  // namespace

const char* to_string(ExtremumKind k) {
  return k == ExtremumKind::kHigh ? "high" : "low";
}

const char* to_string(FixReason r) {
  switch (r) {
    case FixReason::kInitial:
      return "initial";
    case FixReason::kSarFlip:
      return "sar-flip";
    case FixReason::kOppositeBreak:
      return "opposite-break";
  }
  return "unknown";
}

MinMaxProcess run_minmax(const CandleSeries& series, const SarSeries& sar) {
  if (sar.size() != series.size()) {
    throw std::invalid_argument("run_minmax: SAR series is not aligned");
  }
  Sweep sweep(series);
  for (std::size_t t = 0; t < series.size(); ++t) sweep.step(t, sar[t]);
  return std::move(sweep).finish();
}

MinMaxProcess run_minmax(const CandleSeries& series, const ScalingConfig& cfg) {
  if (series.empty()) return {};
  return run_minmax(series, macd_sar(series, cfg));
}

double relative_delay(const ExtremumPoint& point, double denom) {
  if (!(denom > 0)) {
    throw std::invalid_argument("relative_delay: denominator must be > 0");
  }
  return point.d_abs / denom;
}

}  // namespace dowtrend
