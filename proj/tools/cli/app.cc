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

#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "cli/cli.h"

namespace dowtrend::cli {
namespace {

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

// fits.json -> fits.histograms.csv
std::string histogram_path(const RunConfig& cfg) {
  if (!cfg.histogram_output.empty()) return cfg.histogram_output;
  if (cfg.output.empty()) return {};
  std::filesystem::path p(cfg.output);
  p.replace_extension(".histograms.csv");
  return p.string();
}

struct Flags {
  std::string direction;
  std::string variable;
  std::string range;
  std::string scalings;
};

void apply(const Flags& f, RunConfig& cfg) {
  if (!f.direction.empty()) {
    cfg.direction = f.direction == "up"     ? DirectionFilter::kUp
                    : f.direction == "down" ? DirectionFilter::kDown
                                            : DirectionFilter::kBoth;
  }
  if (!f.variable.empty()) {
    cfg.variable = parse_trend_variable(f.variable);
    if (!cfg.variable) throw UsageError("unknown variable '" + f.variable + "'");
  }
  if (!f.range.empty()) {
    const auto [lo, hi] = parse_range(f.range);
    cfg.range_lo = lo;
    cfg.range_hi = hi;
  }
  if (!f.scalings.empty()) cfg.sweep = parse_sweep(f.scalings);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  Flags flags;
  CLI::App app{"Dow-trend detection, trend statistics and anti-cyclic trade "
               "evaluation",
               "dowtrend"};
  app.require_subcommand(1);

  auto add_inputs = [&](CLI::App* sub, bool scaling_list) {
    sub->add_option("--input,-i", cfg.inputs,
                    "Candle file or directory of *.csv files (one market); "
                    "repeatable");
    sub->add_option("--output,-o", cfg.output, "Report path (default stdout)");
    if (scaling_list) {
      sub->add_option("--scaling", cfg.scalings,
                      "MACD scaling; repeatable (default 1 1.2 1.5 2 3)");
    }
    sub->add_option("--direction", flags.direction, "up, down or both")
        ->check(CLI::IsMember({"up", "down", "both"}));
    sub->add_option("--seed", cfg.seed, "Random seed");
  };
  auto add_trade_levels = [&](CLI::App* sub) {
    sub->add_option("--entry", cfg.entry, "Entry retracement level a")
        ->capture_default_str();
    sub->add_option("--target", cfg.target, "Target retracement level t")
        ->capture_default_str();
  };

  CLI::App* detect = app.add_subcommand("detect", "Extrema and trend phases");
  add_inputs(detect, true);

  CLI::App* stats =
      app.add_subcommand("stats", "Log-normal fits and histograms");
  add_inputs(stats, true);
  stats->add_option("--variable", flags.variable,
                    "retracement, duration, rel-movement, rel-correction, "
                    "delay-x, delay-m or delay-c (default all)");
  stats->add_option("--range", flags.range, "Histogram range lo:hi");
  stats->add_option("--bin-width", cfg.bin_width, "Histogram bin width");
  stats->add_option("--histogram-output", cfg.histogram_output,
                    "Histogram CSV path (default next to --output)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "Mean trend period against MACD scaling");
  add_inputs(sweep, false);
  sweep->add_option("--scalings", flags.scalings,
                    "Scaling grid lo:hi:step (default 0.5:5:0.1)");

  CLI::App* trade = app.add_subcommand(
      "trade-eval", "Expected anti-cyclic return, analytic and Monte Carlo");
  trade->add_option("--mu-x", cfg.params.mu_x)->required();
  trade->add_option("--sigma-x", cfg.params.sigma_x)->required();
  trade->add_option("--mu-d", cfg.params.mu_d)->required();
  trade->add_option("--sigma-d", cfg.params.sigma_d)->required();
  trade->add_option("--rho", cfg.params.rho)->capture_default_str();
  add_trade_levels(trade);
  trade->add_option("--mc-samples", cfg.mc_samples,
                    "Monte Carlo draws, 0 to skip")
      ->capture_default_str();
  trade->add_option("--seed", cfg.seed, "Random seed");
  trade->add_option("--output,-o", cfg.output, "Report path (default stdout)");

  CLI::App* backtest =
      app.add_subcommand("backtest", "Replay the anti-cyclic system on candles");
  add_inputs(backtest, true);
  add_trade_levels(backtest);

  CLI::App* synth = app.add_subcommand("synth", "Write synthetic candle files");
  synth->add_option("kind", cfg.synth_kind, "gbm or planted")
      ->required()
      ->check(CLI::IsMember({"gbm", "planted"}));
  synth->add_option("--output,-o", cfg.output,
                    "File, or directory when --count > 1 (default stdout)");
  synth->add_option("--seed", cfg.seed, "Seed of the first series");
  synth->add_option("--count", cfg.count, "Number of series");
  std::string symbol;
  synth->add_option("--symbol", symbol, "Symbol used in file names");
  synth->add_option("--bars", cfg.gbm.bars, "gbm: bars")->capture_default_str();
  synth->add_option("--s0", cfg.gbm.s0, "gbm: first close")
      ->capture_default_str();
  synth->add_option("--drift", cfg.gbm.drift, "gbm: mean log-return per bar")
      ->capture_default_str();
  synth->add_option("--vol", cfg.gbm.vol, "gbm: log-return sd per bar")
      ->capture_default_str();
  synth->add_option("--corrections", cfg.planted.corrections,
                    "planted: number of corrections")
      ->capture_default_str();
  synth->add_option("--relative-movement", cfg.planted.relative_movement,
                    "planted: movement as a fraction of its starting low")
      ->capture_default_str();
  synth->add_option("--mu-x", cfg.planted.retracement.mu,
                    "planted: retracement log-mean")
      ->capture_default_str();
  synth->add_option("--sigma-x", cfg.planted.retracement.sigma,
                    "planted: retracement log-sd")
      ->capture_default_str();
  synth->add_option("--movement-bars", cfg.planted.movement_bars,
                    "planted: bars per movement")
      ->capture_default_str();
  synth->add_option("--min-leg-bars", cfg.planted.min_leg_bars,
                    "planted: minimum bars per correction")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    apply(flags, cfg);
    if (!symbol.empty()) cfg.gbm.symbol = cfg.planted.symbol = symbol;

    if (cfg.command == "detect") {
      emit(cfg.output, detect_report(cfg), out);
    } else if (cfg.command == "stats") {
      const StatsReports r = stats_reports(cfg);
      emit(cfg.output, r.fits, out);
      const std::string hist = histogram_path(cfg);
      if (!hist.empty()) emit(hist, r.histograms, out);
    } else if (cfg.command == "sweep") {
      emit(cfg.output, sweep_report(cfg), out);
    } else if (cfg.command == "trade-eval") {
      emit(cfg.output, trade_eval_report(cfg), out);
    } else if (cfg.command == "backtest") {
      emit(cfg.output, backtest_report(cfg), out);
    } else if (cfg.command == "synth") {
      run_synth(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace dowtrend::cli
