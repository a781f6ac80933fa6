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

// OHLC candle series: parsing, validation, serialization and a seeded
// geometric-Brownian-motion generator.
//
// File format (one bar per line):
//
//   date,open,high,low,close[,volume]
//   2020-01-02,10,12,9,11
//
// The date column holds either an ISO-8601 calendar date or an integer bar
// index. Volume is accepted and ignored. Bar distance everywhere in the
// library is the index difference within the series, so calendar gaps
// (weekends, holidays) do not count.

#ifndef DOWTREND_MARKET_DATA_H_
#define DOWTREND_MARKET_DATA_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dowtrend {

struct Timestamp {
  enum class Kind : std::uint8_t { kDate, kIndex };

  Kind kind = Kind::kIndex;
  // Days since 1970-01-01 for kDate, the raw bar index for kIndex.
  std::int64_t value = 0;

  static Timestamp index(std::int64_t i) { return {Kind::kIndex, i}; }
  static Timestamp days(std::int64_t d) { return {Kind::kDate, d}; }

  friend bool operator==(const Timestamp&, const Timestamp&) = default;
};

// Parses "YYYY-MM-DD" or a (possibly negative) integer. Throws
// std::invalid_argument on anything else.
Timestamp parse_timestamp(std::string_view text);
std::string format_timestamp(const Timestamp& ts);

struct Candle {
  Timestamp timestamp;
  double open = 0;
  double high = 0;
  double low = 0;
  double close = 0;

  friend bool operator==(const Candle&, const Candle&) = default;
};

// Empty string when the candle satisfies low <= open,close <= high and
// low > 0; otherwise a short description of the first violated rule.
std::string check_candle(const Candle& c);

class CandleSeries {
 public:
  CandleSeries() = default;
  // Validates every candle and strictly increasing timestamps; throws
  // std::invalid_argument otherwise.
  CandleSeries(std::string symbol, std::vector<Candle> candles);

  const std::string& symbol() const { return symbol_; }
  std::span<const Candle> candles() const { return candles_; }
  std::size_t size() const { return candles_.size(); }
  bool empty() const { return candles_.empty(); }
  const Candle& operator[](std::size_t i) const { return candles_[i]; }

  std::vector<double> closes() const;

  // First n bars (clamped to size()).
  CandleSeries prefix(std::size_t n) const;

 private:
  std::string symbol_;
  std::vector<Candle> candles_;
};

// Thrown by parse_candles; row() is the 1-based data row (header excluded).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t row, const std::string& what);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

CandleSeries parse_candles(std::istream& in, std::string symbol);
CandleSeries parse_candles(std::string_view text, std::string symbol);
CandleSeries load_candles(const std::string& path);

// Writes the header and one row per candle. Prices use the shortest
// representation that round-trips exactly.
void write_candles(std::ostream& out, const CandleSeries& series);
std::string format_candles(const CandleSeries& series);

struct GbmSpec {
  double s0 = 100.0;
  // Mean log-return per bar.
  double drift = 0.0;
  // Standard deviation of the log-return per bar.
  double vol = 0.01;
  std::size_t bars = 1000;
  std::uint64_t seed = 1;
  std::string symbol = "GBM";
};

// close[0] = s0 and close[t] = close[t-1] * exp(drift + vol * z_t). Each bar
// opens at the previous close; wicks extend max(open, close) and
// min(open, close) by |N(0, vol / 4)| relative noise, capped at 50%.
// Timestamps are bar indices. Deterministic for a fixed seed.
CandleSeries synth_gbm(const GbmSpec& spec);

}  // namespace dowtrend

#endif  // DOWTREND_MARKET_DATA_H_
