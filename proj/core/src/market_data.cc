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

#include "dowtrend/market_data.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace dowtrend {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

bool try_parse_timestamp(std::string_view text, Timestamp& out) {
  text = trim(text);
  if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
    std::int64_t y = 0, m = 0, d = 0;
    if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) ||
        !parse_int(text.substr(8, 2), d)) {
      return false;
    }
    const std::chrono::year_month_day ymd{
        std::chrono::year{static_cast<int>(y)},
        std::chrono::month{static_cast<unsigned>(m)},
        std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return false;
    out = Timestamp::days(
        std::chrono::sys_days{ymd}.time_since_epoch().count());
    return true;
  }
  std::int64_t index = 0;
  if (!parse_int(text, index)) return false;
  out = Timestamp::index(index);
  return true;
}

bool is_header(const std::vector<std::string_view>& fields) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "date", "open", "high", "low", "close", "volume"};
  if (fields.size() != 5 && fields.size() != 6) return false;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::string lower(fields[i]);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower != kNames[i]) return false;
  }
  return true;
}

std::string row_error(std::string_view what, std::size_t row) {
  std::string msg(what);
  msg += " at row ";
  msg += std::to_string(row);
  return msg;
}

void append_double(std::string& out, double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), ptr);
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  Timestamp ts;
  if (!try_parse_timestamp(text, ts)) {
    throw std::invalid_argument("invalid timestamp '" + std::string(text) +
                                "'");
  }
  return ts;
}

std::string format_timestamp(const Timestamp& ts) {
  if (ts.kind == Timestamp::Kind::kIndex) return std::to_string(ts.value);
  const std::chrono::year_month_day ymd{
      std::chrono::sys_days{std::chrono::days{ts.value}}};
  std::array<char, 16> buf{};
  std::snprintf(buf.data(), buf.size(), "%04d-%02u-%02u",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf.data();
}

std::string check_candle(const Candle& c) {
  if (!(c.low > 0) || !(c.open > 0) || !(c.high > 0) || !(c.close > 0)) {
    return "non-positive price";
  }
  if (c.high < c.low) return "high < low";
  if (c.open < c.low || c.open > c.high) return "open outside [low, high]";
  if (c.close < c.low || c.close > c.high) return "close outside [low, high]";
  return {};
}

CandleSeries::CandleSeries(std::string symbol, std::vector<Candle> candles)
    : symbol_(std::move(symbol)), candles_(std::move(candles)) {
  for (std::size_t i = 0; i < candles_.size(); ++i) {
    if (auto err = check_candle(candles_[i]); !err.empty()) {
      throw std::invalid_argument(err + " at bar " + std::to_string(i));
    }
    if (i > 0) {
      const Timestamp& prev = candles_[i - 1].timestamp;
      const Timestamp& cur = candles_[i].timestamp;
      if (prev.kind != cur.kind || cur.value <= prev.value) {
        throw std::invalid_argument("non-increasing timestamp at bar " +
                                    std::to_string(i));
      }
    }
  }
}

std::vector<double> CandleSeries::closes() const {
  std::vector<double> out;
  out.reserve(candles_.size());
  for (const Candle& c : candles_) out.push_back(c.close);
  return out;
}

CandleSeries CandleSeries::prefix(std::size_t n) const {
  CandleSeries out;
  out.symbol_ = symbol_;
  n = std::min(n, candles_.size());
  out.candles_.assign(candles_.begin(), candles_.begin() + n);
  return out;
}

ParseError::ParseError(std::size_t row, const std::string& what)
    : std::runtime_error(what), row_(row) {}

CandleSeries parse_candles(std::istream& in, std::string symbol) {
  std::vector<Candle> candles;
  std::string line;
  std::size_t row = 0;
  bool first_line = true;
  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    if (view.empty()) continue;
    auto fields = split_fields(view);
    if (first_line) {
      first_line = false;
      Timestamp probe;
      if (!try_parse_timestamp(fields[0], probe)) {
        if (!is_header(fields)) {
          throw ParseError(0, "unrecognized header '" + std::string(view) +
                                  "'");
        }
        continue;
      }
    }
    ++row;
    if (fields.size() != 5 && fields.size() != 6) {
      throw ParseError(row, row_error("wrong field count", row));
    }
    Candle c;
    if (!try_parse_timestamp(fields[0], c.timestamp)) {
      throw ParseError(row, row_error("invalid timestamp", row));
    }
    if (!parse_double(fields[1], c.open) || !parse_double(fields[2], c.high) ||
        !parse_double(fields[3], c.low) || !parse_double(fields[4], c.close)) {
      throw ParseError(row, row_error("non-numeric price", row));
    }
    if (auto err = check_candle(c); !err.empty()) {
      throw ParseError(row, row_error(err, row));
    }
    if (!candles.empty()) {
      const Timestamp& prev = candles.back().timestamp;
      if (prev.kind != c.timestamp.kind) {
        throw ParseError(row, row_error("mixed timestamp formats", row));
      }
      if (c.timestamp.value <= prev.value) {
        throw ParseError(row, row_error("non-increasing timestamp", row));
      }
    }
    candles.push_back(c);
  }
  return CandleSeries(std::move(symbol), std::move(candles));
}

CandleSeries parse_candles(std::string_view text, std::string symbol) {
  std::istringstream in{std::string(text)};
  return parse_candles(in, std::move(symbol));
}

CandleSeries load_candles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_candles(in, std::filesystem::path(path).stem().string());
}

void write_candles(std::ostream& out, const CandleSeries& series) {
  out << format_candles(series);
}

std::string format_candles(const CandleSeries& series) {
  std::string out = "date,open,high,low,close\n";
  for (const Candle& c : series.candles()) {
    out += format_timestamp(c.timestamp);
    for (double v : {c.open, c.high, c.low, c.close}) {
      out += ',';
      append_double(out, v);
    }
    out += '\n';
  }
  return out;
}

CandleSeries synth_gbm(const GbmSpec& spec) {
  if (!(spec.s0 > 0) || !(spec.vol >= 0) || spec.bars < 1 ||
      !std::isfinite(spec.drift) || !std::isfinite(spec.vol)) {
    throw std::invalid_argument("synth_gbm: need s0 > 0, vol >= 0, bars >= 1");
  }
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> z(0.0, 1.0);
  const double wick = spec.vol / 4.0;
  auto wick_factor = [&] { return std::min(std::abs(wick * z(rng)), 0.5); };

  std::vector<Candle> candles;
  candles.reserve(spec.bars);
  double prev_close = spec.s0;
  for (std::size_t t = 0; t < spec.bars; ++t) {
    Candle c;
    c.timestamp = Timestamp::index(static_cast<std::int64_t>(t));
    c.open = prev_close;
    c.close = t == 0 ? spec.s0
                     : prev_close * std::exp(spec.drift + spec.vol * z(rng));
    c.high = std::max(c.open, c.close) * (1.0 + wick_factor());
    c.low = std::min(c.open, c.close) * (1.0 - wick_factor());
    candles.push_back(c);
    prev_close = c.close;
  }
  return CandleSeries(spec.symbol, std::move(candles));
}

}  // namespace dowtrend
