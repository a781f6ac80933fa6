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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <map>

#include "cli/cli.h"

namespace dowtrend::cli {
namespace fs = std::filesystem;

namespace {

const char* to_string(DirectionFilter d) {
  switch (d) {
    case DirectionFilter::kUp: return "up";
    case DirectionFilter::kDown: return "down";
    case DirectionFilter::kBoth: return "both";
  }
  return "?";
}

double parse_number(std::string_view text, const std::string& whole) {
  double v = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw UsageError("invalid number '" + std::string(text) + "' in '" +
                     whole + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::string market_name(const fs::path& dir) {
  fs::path p = dir.lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  const std::string name = p.filename().string();
  return name.empty() || name == "." ? fs::absolute(p).filename().string()
                                     : name;
}

CandleSeries load_file(const fs::path& path) {
  try {
    return load_candles(path.string());
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<double> SweepRange::cells() const {
  std::vector<double> out;
  const double span = (hi - lo) / step;
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  out.reserve(n);
  // Multiplying avoids the drift of repeated addition.
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(lo + static_cast<double>(i) * step);
  }
  return out;
}

DirectionFilter effective_direction(const RunConfig& cfg) {
  if (cfg.direction) return *cfg.direction;
  return cfg.command == "backtest" ? DirectionFilter::kUp
                                   : DirectionFilter::kBoth;
}

HistogramSpec default_histogram(TrendVariable v) {
  switch (v) {
    case TrendVariable::kRetracement:
    case TrendVariable::kDelayX:
      return {0.0, 5.0, 0.11};
    case TrendVariable::kRelMovement:
    case TrendVariable::kRelCorrection:
    case TrendVariable::kDelayM:
    case TrendVariable::kDelayC:
      return {0.0, 1.0, 0.01};
    case TrendVariable::kDuration:
    case TrendVariable::kPeriodGap:
      return {0.0, 100.0, 1.0};
  }
  return {};
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError("range must be lo:hi, got '" + text + "'");
  const double lo = parse_number(parts[0], text);
  const double hi = parse_number(parts[1], text);
  if (!(lo < hi)) throw UsageError("range needs lo < hi, got '" + text + "'");
  return {lo, hi};
}

SweepRange parse_sweep(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw UsageError("scalings must be lo:hi:step, got '" + text + "'");
  }
  SweepRange r{parse_number(parts[0], text), parse_number(parts[1], text),
               parse_number(parts[2], text)};
  if (!(r.lo > 0) || !(r.lo <= r.hi) || !(r.step > 0)) {
    throw UsageError("scalings need 0 < lo <= hi and step > 0, got '" + text +
                     "'");
  }
  return r;
}

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  j["seed"] = cfg.seed;
  if (cfg.command == "trade-eval") {
    j["mu_x"] = cfg.params.mu_x;
    j["sigma_x"] = cfg.params.sigma_x;
    j["mu_d"] = cfg.params.mu_d;
    j["sigma_d"] = cfg.params.sigma_d;
    j["rho"] = cfg.params.rho;
    j["entry"] = cfg.entry;
    j["target"] = cfg.target;
    j["mc_samples"] = cfg.mc_samples;
    return j;
  }
  if (cfg.command == "synth") {
    j["kind"] = cfg.synth_kind;
    j["count"] = cfg.count;
    if (cfg.synth_kind == "gbm") {
      j["bars"] = cfg.gbm.bars;
      j["s0"] = cfg.gbm.s0;
      j["drift"] = cfg.gbm.drift;
      j["vol"] = cfg.gbm.vol;
    } else {
      j["corrections"] = cfg.planted.corrections;
      j["relative_movement"] = cfg.planted.relative_movement;
      j["mu_x"] = cfg.planted.retracement.mu;
      j["sigma_x"] = cfg.planted.retracement.sigma;
      j["movement_bars"] = cfg.planted.movement_bars;
      j["min_leg_bars"] = cfg.planted.min_leg_bars;
    }
    return j;
  }
  j["inputs"] = cfg.inputs;
  j["direction"] = to_string(effective_direction(cfg));
  if (cfg.command == "sweep") {
    j["scalings"] = {cfg.sweep.lo, cfg.sweep.hi, cfg.sweep.step};
  } else {
    j["scalings"] = cfg.scalings;
  }
  if (cfg.command == "stats") {
    j["variable"] = cfg.variable ? dowtrend::to_string(*cfg.variable) : "all";
    if (cfg.range_lo) j["range"] = {*cfg.range_lo, *cfg.range_hi};
    if (cfg.bin_width) j["bin_width"] = *cfg.bin_width;
  }
  if (cfg.command == "backtest") {
    j["entry"] = cfg.entry;
    j["target"] = cfg.target;
  }
  return j;
}

std::vector<Market> load_markets(const std::vector<std::string>& inputs) {
  if (inputs.empty()) throw UsageError("no input files");
  std::map<std::string, std::vector<CandleSeries>> by_name;
  for (const std::string& input : inputs) {
    const fs::path path(input);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
          files.push_back(entry.path());
        }
      }
      if (files.empty()) {
        throw std::runtime_error("no input files in " + input);
      }
      std::sort(files.begin(), files.end());
      auto& bucket = by_name[market_name(path)];
      for (const auto& f : files) bucket.push_back(load_file(f));
    } else if (fs::is_regular_file(path, ec)) {
      CandleSeries s = load_file(path);
      by_name[s.symbol()].push_back(std::move(s));
    } else {
      throw std::runtime_error("no such input: " + input);
    }
  }
  std::vector<Market> markets;
  for (auto& [name, series] : by_name) {
    std::stable_sort(series.begin(), series.end(),
                     [](const CandleSeries& a, const CandleSeries& b) {
                       return a.symbol() < b.symbol();
                     });
    markets.push_back({name, std::move(series)});
  }
  return markets;
}

}  // namespace dowtrend::cli
