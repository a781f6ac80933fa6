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
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "cli/cli.h"
#include "dowtrend/indicators.h"
#include "dowtrend/minmax.h"
#include "dowtrend/trading.h"

namespace dowtrend::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr std::array<TrendVariable, 7> kReportVariables{
    TrendVariable::kRetracement, TrendVariable::kDuration,
    TrendVariable::kRelMovement, TrendVariable::kRelCorrection,
    TrendVariable::kDelayX,      TrendVariable::kDelayM,
    TrendVariable::kDelayC};

// Linked pairs measured on one correction or movement.
constexpr std::array<std::pair<TrendVariable, TrendVariable>, 4> kJointPairs{{
    {TrendVariable::kRetracement, TrendVariable::kDelayX},
    {TrendVariable::kRetracement, TrendVariable::kDuration},
    {TrendVariable::kRelMovement, TrendVariable::kDelayM},
    {TrendVariable::kRelCorrection, TrendVariable::kDelayC},
}};

std::string fmt(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string config_line(const RunConfig& cfg) {
  return "# config: " + to_json(cfg).dump() + "\n";
}

std::vector<double> checked_scalings(const std::vector<double>& in) {
  if (in.empty()) throw UsageError("at least one --scaling is required");
  std::vector<double> s = in;
  for (double v : s) {
    if (!(v > 0) || !std::isfinite(v)) {
      throw UsageError("scalings must be > 0, got " + fmt(v));
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Direction> directions(DirectionFilter f) {
  switch (f) {
    case DirectionFilter::kUp: return {Direction::kUp};
    case DirectionFilter::kDown: return {Direction::kDown};
    case DirectionFilter::kBoth: return {Direction::kUp, Direction::kDown};
  }
  return {};
}

bool keeps(DirectionFilter f, Direction d) {
  return f == DirectionFilter::kBoth ||
         (f == DirectionFilter::kUp) == (d == Direction::kUp);
}

TradeSpec checked_trade_spec(const RunConfig& cfg) {
  try {
    return TradeSpec(cfg.entry, cfg.target);
  } catch (const std::invalid_argument&) {
    throw UsageError("need 0 < --entry < --target, got entry " +
                     fmt(cfg.entry) + " and target " + fmt(cfg.target));
  }
}

json point_json(const ExtremumPoint& p, const CandleSeries& s) {
  return {{"kind", to_string(p.kind)},
          {"price", p.price},
          {"bar", p.bar},
          {"time", format_timestamp(s[p.bar].timestamp)},
          {"detection_bar", p.detection_bar},
          {"detection_time", format_timestamp(s[p.detection_bar].timestamp)},
          {"detection_close", p.detection_close},
          {"d_abs", p.d_abs},
          {"reason", to_string(p.reason)}};
}

json phase_json(const TrendPhase& ph) {
  return {{"direction", to_string(ph.direction)},
          {"start_point", ph.start_point_index},
          {"established_point", ph.established_point_index},
          {"end_point", ph.end_point_index},
          {"start_detection_bar", ph.start_detection_bar},
          {"end_detection_bar", ph.end_detection_bar},
          {"completed", ph.completed}};
}

// Samples of one series at one scaling, keyed for joint lookups.
struct Extracted {
  SampleExtraction extraction;
  // (pair_id, variable) -> value
  std::map<std::pair<std::size_t, TrendVariable>, double> by_pair;
};

Extracted keyed(SampleExtraction extraction) {
  Extracted e{std::move(extraction), {}};
  for (const TrendSample& s : e.extraction.samples) {
    e.by_pair[{s.pair_id, s.variable}] = s.value;
  }
  return e;
}

Extracted extract(const CandleSeries& series, double scaling) {
  const MinMaxProcess mm = run_minmax(series, ScalingConfig(scaling));
  const std::vector<TrendPhase> phases = detect_trends(mm);
  return keyed(extract_samples(mm, phases, series, scaling));
}

// (x, y) for every pair id carrying both variables in direction `dir`.
void collect_pairs(const Extracted& e, Direction dir, TrendVariable a,
                   TrendVariable b,
                   std::vector<std::pair<double, double>>& out) {
  for (const TrendSample& s : e.extraction.samples) {
    if (s.variable != a || s.direction != dir) continue;
    const auto it = e.by_pair.find({s.pair_id, b});
    if (it != e.by_pair.end()) out.emplace_back(s.value, it->second);
  }
}

json fit_json(const std::string& market, double scaling, Direction dir,
              TrendVariable var, const std::vector<double>& xs) {
  json j{{"variable", to_string(var)},
         {"direction", to_string(dir)},
         {"scaling", scaling},
         {"market", market},
         {"n", xs.size()}};
  if (xs.empty()) {
    j["flag"] = "no_samples";
    return j;
  }
  FitReport r;
  try {
    r = fit_lognormal(xs);
  } catch (const std::exception&) {
    j["flag"] = "degenerate";
    return j;
  }
  j["mu"] = r.params.mu;
  j["sigma"] = r.params.sigma;
  j["median"] = r.moments.median;
  j["mean"] = r.moments.mean;
  if (r.ad) {
    j["ad_stat"] = r.ad->a2;
    j["ad_stat_star"] = r.ad->a2_star;
    j["p_value"] = r.ad->p_value;
    if (r.ad->clamped) j["ad_clamped"] = true;
  } else {
    j["flag"] = xs.size() < kMinAndersonDarlingSamples ? "insufficient_samples"
                                                       : "zero_variance";
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

}  // namespace

std::string detect_report(const RunConfig& cfg) {
  const auto scalings = checked_scalings(cfg.scalings);
  const auto markets = load_markets(cfg.inputs);
  const DirectionFilter filter = effective_direction(cfg);
  json root;
  root["config"] = to_json(cfg);
  json sections = json::array();
  for (const Market& m : markets) {
    for (const CandleSeries& s : m.series) {
      for (double scaling : scalings) {
        const MinMaxProcess mm = run_minmax(s, ScalingConfig(scaling));
        const auto phases = detect_trends(mm);
        json sec{{"market", m.name},
                 {"symbol", s.symbol()},
                 {"scaling", scaling},
                 {"bars", s.size()}};
        json points = json::array();
        for (const ExtremumPoint& p : mm.points) {
          points.push_back(point_json(p, s));
        }
        sec["points"] = std::move(points);
        if (mm.open_candidate) {
          sec["open_candidate"] = {{"kind", to_string(mm.open_candidate->kind)},
                                   {"price", mm.open_candidate->price},
                                   {"bar", mm.open_candidate->bar}};
        } else {
          sec["open_candidate"] = nullptr;
        }
        json ph = json::array();
        for (const TrendPhase& p : phases) {
          if (keeps(filter, p.direction)) ph.push_back(phase_json(p));
        }
        sec["phases"] = std::move(ph);
        sections.push_back(std::move(sec));
      }
    }
  }
  root["sections"] = std::move(sections);
  return root.dump(2) + "\n";
}

StatsReports stats_reports(const RunConfig& cfg) {
  const auto scalings = checked_scalings(cfg.scalings);
  if (cfg.range_lo.has_value() != cfg.range_hi.has_value()) {
    throw UsageError("range needs both bounds");
  }
  if (cfg.bin_width && !(*cfg.bin_width > 0)) {
    throw UsageError("--bin-width must be > 0");
  }
  std::vector<TrendVariable> vars(kReportVariables.begin(),
                                  kReportVariables.end());
  if (cfg.variable) vars = {*cfg.variable};
  auto spec_for = [&](TrendVariable v) {
    HistogramSpec h = default_histogram(v);
    if (cfg.range_lo) {
      h.lo = *cfg.range_lo;
      h.hi = *cfg.range_hi;
    }
    if (cfg.bin_width) h.bin_width = *cfg.bin_width;
    try {
      h.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return h;
  };
  for (TrendVariable v : vars) spec_for(v);

  const auto markets = load_markets(cfg.inputs);
  const auto dirs = directions(effective_direction(cfg));

  json root;
  root["config"] = to_json(cfg);
  root["notes"] = {
      {"mu_sigma", "maximum likelihood, 1/n variance"},
      {"ad_stat",
       "Anderson-Darling A^2 on standardized logs, unbiased (n-1) variance"},
      {"p_value", "D'Agostino-Stephens, A^2* = A^2 (1 + 0.75/n + 2.25/n^2)"},
      {"rho", "correlation of the logs, 1/n estimators"}};
  json fits = json::array();
  json joint = json::array();
  json extraction = json::array();
  std::ostringstream csv;
  csv << config_line(cfg)
      << "market,scaling,direction,variable,bin_lo,bin_hi,count,density,"
         "total,out_of_range\n";

  for (const Market& m : markets) {
    for (double scaling : scalings) {
      std::vector<Extracted> per_series;
      std::size_t zero_delay = 0, degenerate = 0;
      for (const CandleSeries& s : m.series) {
        per_series.push_back(extract(s, scaling));
        zero_delay += per_series.back().extraction.skipped_zero_delay;
        degenerate += per_series.back().extraction.skipped_degenerate;
      }
      extraction.push_back({{"market", m.name},
                            {"scaling", scaling},
                            {"series", m.series.size()},
                            {"skipped_zero_delay", zero_delay},
                            {"skipped_degenerate", degenerate}});
      for (Direction dir : dirs) {
        for (TrendVariable v : vars) {
          std::vector<double> xs;
          for (const Extracted& e : per_series) {
            for (const TrendSample& s : e.extraction.samples) {
              if (s.variable == v && s.direction == dir) xs.push_back(s.value);
            }
          }
          fits.push_back(fit_json(m.name, scaling, dir, v, xs));

          const HistogramSpec spec = spec_for(v);
          const Histogram h = histogram(xs, spec);
          for (std::size_t i = 0; i < h.counts.size(); ++i) {
            const double lo = h.bin_lo(i);
            const double hi = std::min(lo + spec.bin_width, spec.hi);
            csv << m.name << ',' << fmt(scaling) << ',' << to_string(dir)
                << ',' << to_string(v) << ',' << fmt(lo) << ',' << fmt(hi)
                << ',' << h.counts[i] << ',' << fmt(h.density[i]) << ','
                << h.total << ',' << h.out_of_range << '\n';
          }
        }
        for (const auto& [a, b] : kJointPairs) {
          if (cfg.variable && *cfg.variable != a && *cfg.variable != b) {
            continue;
          }
          std::vector<std::pair<double, double>> pairs;
          for (const Extracted& e : per_series) {
            collect_pairs(e, dir, a, b, pairs);
          }
          json j{{"variable", to_string(a)},
                 {"paired_variable", to_string(b)},
                 {"direction", to_string(dir)},
                 {"scaling", scaling},
                 {"market", m.name},
                 {"n", pairs.size()}};
          try {
            j["rho"] = log_correlation(pairs);
          } catch (const std::invalid_argument&) {
            j["flag"] = pairs.size() < 2 ? "insufficient_samples" : "degenerate";
          }
          joint.push_back(std::move(j));
        }
      }
    }
  }
  root["fits"] = std::move(fits);
  root["joint"] = std::move(joint);
  root["extraction"] = std::move(extraction);
  return {root.dump(2) + "\n", csv.str()};
}

std::string sweep_report(const RunConfig& cfg) {
  const auto cells = cfg.sweep.cells();
  const auto markets = load_markets(cfg.inputs);
  const DirectionFilter filter = effective_direction(cfg);
  std::ostringstream csv;
  csv << config_line(cfg)
      << "record,market,scaling,period,gaps,status,intercept,slope,"
         "residual_rms\n";
  for (const Market& m : markets) {
    std::vector<ScalingPeriod> ok;
    for (double scaling : cells) {
      double sum = 0;
      std::size_t count = 0;
      for (const CandleSeries& s : m.series) {
        const MinMaxProcess mm = run_minmax(s, ScalingConfig(scaling));
        const auto phases = detect_trends(mm);
        // A pair seen by an up and a down phase counts once.
        std::set<std::size_t> seen;
        for (const PeriodGap& g : period_gaps(mm, phases)) {
          if (!keeps(filter, g.direction)) continue;
          if (!seen.insert(g.first_point_index).second) continue;
          sum += static_cast<double>(g.bars);
          ++count;
        }
      }
      csv << "cell," << m.name << ',' << fmt(scaling) << ',';
      if (count == 0) {
        csv << ",0,insufficient,,,\n";
        continue;
      }
      const double period = sum / static_cast<double>(count);
      ok.push_back({scaling, period});
      csv << fmt(period) << ',' << count << ",ok,,,\n";
    }
    csv << "fit," << m.name << ",,," << ok.size() << ',';
    if (ok.size() < 2) {
      csv << "insufficient,,,\n";
      continue;
    }
    const LinearFit fit = period_scaling_fit(ok);
    csv << "ok," << fmt(fit.intercept) << ',' << fmt(fit.slope) << ','
        << fmt(fit.residual_rms) << '\n';
  }
  return csv.str();
}

std::string trade_eval_report(const RunConfig& cfg) {
  const TradeSpec spec = checked_trade_spec(cfg);
  try {
    validate(cfg.params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.mc_samples != 0 && cfg.mc_samples < kMinSimulationDraws) {
    throw UsageError("--mc-samples must be 0 or at least 10000");
  }
  const ExpectedReturn er = expected_return_detail(cfg.params, spec);
  json root;
  root["config"] = to_json(cfg);
  root["analytic"] = {{"expected_return", er.value},
                      {"no_target_value", er.no_target_value},
                      {"open_probability", er.open_probability},
                      {"target_probability", er.target_probability}};
  if (cfg.mc_samples == 0) {
    root["monte_carlo"] = nullptr;
  } else {
    const MonteCarloEstimate mc =
        simulate_expected_return(cfg.params, spec, cfg.mc_samples, cfg.seed);
    root["monte_carlo"] = {{"mean", mc.mean},
                           {"std_error", mc.std_error},
                           {"accepted", mc.accepted},
                           {"draws", mc.draws},
                           {"z", (mc.mean - er.value) / mc.std_error}};
  }
  return root.dump(2) + "\n";
}

std::string backtest_report(const RunConfig& cfg) {
  const TradeSpec spec = checked_trade_spec(cfg);
  const auto scalings = checked_scalings(cfg.scalings);
  const auto markets = load_markets(cfg.inputs);
  const auto dirs = directions(effective_direction(cfg));

  json root;
  root["config"] = to_json(cfg);
  json cells = json::array();
  for (const Market& m : markets) {
    for (double scaling : scalings) {
      std::vector<Extracted> per_series;
      std::vector<MinMaxProcess> mms;
      std::vector<std::vector<TrendPhase>> phases;
      for (const CandleSeries& s : m.series) {
        mms.push_back(run_minmax(s, ScalingConfig(scaling)));
        phases.push_back(detect_trends(mms.back()));
        per_series.push_back(
            keyed(extract_samples(mms.back(), phases.back(), s, scaling)));
      }
      for (Direction dir : dirs) {
        const BacktestOptions options{dir == Direction::kUp,
                                      dir == Direction::kDown};
        json list = json::array();
        double sum = 0;
        std::size_t hits = 0, truncated = 0;
        for (std::size_t k = 0; k < m.series.size(); ++k) {
          const CandleSeries& s = m.series[k];
          const BacktestResult r =
              backtest_anticyclic(s, mms[k], phases[k], spec, options);
          truncated += r.truncated;
          for (const BacktestTrade& t : r.trades) {
            json j{{"symbol", s.symbol()},
                   {"entry_bar", t.entry_bar},
                   {"entry_time", format_timestamp(s[t.entry_bar].timestamp)},
                   {"exit_bar", t.exit_bar},
                   {"exit_time", format_timestamp(s[t.exit_bar].timestamp)},
                   {"entry_price", t.entry_price},
                   {"exit_price", t.exit_price},
                   {"ret", t.outcome.ret},
                   {"reached_target", t.outcome.reached_target}};
            // x and d are unknown when the target filled before the
            // correction's end was detected at the end of the series.
            if (t.outcome.x > 0) {
              j["x"] = t.outcome.x;
              j["d"] = t.outcome.d;
            }
            sum += t.outcome.ret;
            hits += t.outcome.reached_target ? 1 : 0;
            list.push_back(std::move(j));
          }
        }
        json cell{{"market", m.name},
                  {"scaling", scaling},
                  {"direction", to_string(dir)},
                  {"trades", list.size()},
                  {"target_hits", hits},
                  {"truncated", truncated}};
        cell["mean_return"] =
            list.empty() ? json(nullptr)
                         : json(sum / static_cast<double>(list.size()));

        // Lemma prediction from (X, D_X) fitted on the same cell; reported
        // for comparison, never asserted.
        std::vector<std::pair<double, double>> pairs;
        for (const Extracted& e : per_series) {
          collect_pairs(e, dir, TrendVariable::kRetracement,
                        TrendVariable::kDelayX, pairs);
        }
        cell["lemma_samples"] = pairs.size();
        cell["lemma_expected_return"] = nullptr;
        if (pairs.size() >= kMinAndersonDarlingSamples) {
          std::vector<double> x, d;
          for (const auto& [a, b] : pairs) {
            x.push_back(a);
            d.push_back(b);
          }
          try {
            const LogNormalParams px = lognormal_mle(x);
            const LogNormalParams pd = lognormal_mle(d);
            const BivariateLogNormalParams p{px.mu, pd.mu, px.sigma, pd.sigma,
                                             log_correlation(pairs)};
            cell["lemma_expected_return"] = expected_return(p, spec);
          } catch (const std::exception&) {
            cell["lemma_flag"] = "degenerate";
          }
        }
        cell["trade_list"] = std::move(list);
        cells.push_back(std::move(cell));
      }
    }
  }
  root["cells"] = std::move(cells);
  return root.dump(2) + "\n";
}

void run_synth(const RunConfig& cfg, std::ostream& out) {
  if (cfg.synth_kind != "gbm" && cfg.synth_kind != "planted") {
    throw UsageError("synth kind must be gbm or planted");
  }
  if (cfg.count == 0) throw UsageError("--count must be >= 1");
  if (cfg.count > 1 && cfg.output.empty()) {
    throw UsageError("--count > 1 needs --output DIR");
  }
  auto make = [&](std::uint64_t seed) {
    if (cfg.synth_kind == "gbm") {
      GbmSpec g = cfg.gbm;
      g.seed = seed;
      return synth_gbm(g);
    }
    PlantedTrendSpec p = cfg.planted;
    p.seed = seed;
    return synth_planted_trend(p).series;
  };
  const std::string symbol =
      cfg.synth_kind == "gbm" ? cfg.gbm.symbol : cfg.planted.symbol;
  if (cfg.count == 1) {
    const std::string text = format_candles(make(cfg.seed));
    if (cfg.output.empty()) {
      out << text;
    } else {
      write_text(cfg.output, text);
    }
    return;
  }
  std::filesystem::create_directories(cfg.output);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "_%03zu.csv", i);
    const auto path = std::filesystem::path(cfg.output) / (symbol + name);
    write_text(path.string(), format_candles(make(cfg.seed + i)));
  }
}

}  // namespace dowtrend::cli
