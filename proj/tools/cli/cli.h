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

// The `dowtrend` command-line tool as a library, so tests can drive it
// without spawning processes.
//
// Reports are JSON for detections, fits, trade evaluations and backtests,
// and CSV for histograms and sweeps. Every report embeds the RunConfig that
// produced it (CSV files as a leading "# config: " line). Output is a pure
// function of the inputs and the seed.

#ifndef DOWTREND_TOOLS_CLI_CLI_H_
#define DOWTREND_TOOLS_CLI_CLI_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dowtrend/market_data.h"
#include "dowtrend/stats.h"
#include "dowtrend/synthetic.h"
#include "dowtrend/trend.h"
#include "json.hpp"

namespace dowtrend::cli {

// Bad flags or flag combinations; reported with exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class DirectionFilter { kUp, kDown, kBoth };

struct SweepRange {
  double lo = 0.5;
  double hi = 5.0;
  double step = 0.1;

  // lo, lo + step, ... up to hi inclusive (with a 1e-9 step tolerance).
  std::vector<double> cells() const;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;  // empty: stdout
  std::string histogram_output;
  std::vector<double> scalings{1.0, 1.2, 1.5, 2.0, 3.0};
  // Unset means the command default: both for detect, stats and sweep, up
  // for backtest.
  std::optional<DirectionFilter> direction;
  std::uint64_t seed = 1;

  // stats
  std::optional<TrendVariable> variable;
  std::optional<double> range_lo, range_hi, bin_width;

  // sweep
  SweepRange sweep;

  // trade-eval, backtest
  BivariateLogNormalParams params;
  double entry = 0.382;
  double target = 1.0;
  std::size_t mc_samples = 1'000'000;

  // synth
  std::string synth_kind;  // gbm | planted
  std::size_t count = 1;
  GbmSpec gbm;
  PlantedTrendSpec planted;
};

DirectionFilter effective_direction(const RunConfig& cfg);
nlohmann::ordered_json to_json(const RunConfig& cfg);

// Histogram used by `stats` when --range / --bin-width are not given.
HistogramSpec default_histogram(TrendVariable v);

// "lo:hi" and "lo:hi:step".
std::pair<double, double> parse_range(const std::string& text);
SweepRange parse_sweep(const std::string& text);

// All candle files of one market. A directory is one market named after
// the directory and pools every *.csv inside it; a single file is its own
// market named after its symbol. Markets come back sorted by name and
// series by symbol. Throws UsageError for no inputs and std::runtime_error
// for missing paths, empty directories and parse errors (prefixed with the
// file path).
struct Market {
  std::string name;
  std::vector<CandleSeries> series;
};
std::vector<Market> load_markets(const std::vector<std::string>& inputs);

// Report builders. Each returns the report text.
std::string detect_report(const RunConfig& cfg);
struct StatsReports {
  std::string fits;        // JSON
  std::string histograms;  // CSV
};
StatsReports stats_reports(const RunConfig& cfg);
std::string sweep_report(const RunConfig& cfg);
std::string trade_eval_report(const RunConfig& cfg);
std::string backtest_report(const RunConfig& cfg);

// Writes synthetic candle files. With count == 1 the output is a file (or
// stdout when empty); otherwise a directory that receives
// <symbol>_<index>.csv files, seeds counting up from cfg.seed.
void run_synth(const RunConfig& cfg, std::ostream& out);

// Parses argv and runs the command. Returns the process exit code: 0 on
// success, 1 on data or I/O errors, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace dowtrend::cli

#endif  // DOWTREND_TOOLS_CLI_CLI_H_
