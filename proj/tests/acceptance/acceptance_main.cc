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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion also fails when it overruns its time
// budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "cli/cli.h"
#include "dowtrend/indicators.h"
#include "dowtrend/market_data.h"
#include "dowtrend/minmax.h"
#include "dowtrend/stats.h"
#include "dowtrend/synthetic.h"
#include "dowtrend/trading.h"
#include "dowtrend/trend.h"
#include "support/fixtures.h"

namespace dowtrend {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string format(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Records the first failure; later ones only bump the count.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ == 0) first_ = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    return {false, summary + format("; %zu failure(s), first: ", count_) +
                       first_};
  }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

bool alternates(const MinMaxProcess& mm) {
  for (std::size_t i = 1; i < mm.points.size(); ++i) {
    if (mm.points[i].kind == mm.points[i - 1].kind) return false;
  }
  return true;
}

// --- 1 --------------------------------------------------------------------

Outcome minmax_alternation_and_causality() {
  Failures f;
  std::size_t cuts = 0, points = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const CandleSeries s = synth_gbm({.bars = 2000, .seed = seed});
    const MinMaxProcess mm = run_minmax(s, ScalingConfig(1));
    points += mm.points.size();
    if (!alternates(mm)) f.add(format("seed %llu does not alternate",
                                      static_cast<unsigned long long>(seed)));
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> cut_at(1, s.size() - 1);
    for (int k = 0; k < 10; ++k) {
      const std::size_t cut = cut_at(rng);
      ++cuts;
      const MinMaxProcess part = run_minmax(s.prefix(cut), ScalingConfig(1));
      std::vector<ExtremumPoint> expected;
      for (const ExtremumPoint& p : mm.points) {
        if (p.detection_bar < cut) expected.push_back(p);
      }
      if (part.points != expected) {
        f.add(format("seed %llu cut %zu: prefix replay differs",
                     static_cast<unsigned long long>(seed), cut));
      }
    }
  }
  return f.outcome(format("1000 GBM series x 2000 bars, %zu fixed points, "
                          "%zu prefix cuts",
                          points, cuts));
}

// --- 2 --------------------------------------------------------------------

Outcome fixture_fidelity() {
  Failures f;
  std::size_t checked = 0;

  const auto hand = testing::hand_sar_fixture();
  const MinMaxProcess mm = run_minmax(hand.series, hand.sar);
  if (mm.points != hand.points) f.add("hand-SAR extrema differ");
  if (mm.open_candidate != hand.open_candidate) {
    f.add("hand-SAR open candidate differs");
  }
  const auto phases = detect_trends(mm);
  if (phases != hand.phases) f.add("hand-SAR trend phases differ");
  const auto ex = extract_samples(mm, phases, hand.series, 1);
  if (ex.samples.size() != hand.samples.size()) {
    f.add(format("hand-SAR: %zu samples, expected %zu", ex.samples.size(),
                 hand.samples.size()));
  } else {
    for (std::size_t i = 0; i < ex.samples.size(); ++i) {
      const auto& got = ex.samples[i];
      const auto& want = hand.samples[i];
      if (got.variable != want.variable || got.direction != want.direction ||
          got.value != want.value) {
        f.add(format("hand-SAR sample %zu: %s = %.17g, expected %s = %.17g", i,
                     to_string(got.variable), got.value,
                     to_string(want.variable), want.value));
      }
    }
  }
  checked += hand.points.size() + hand.phases.size() + hand.samples.size();

  const auto ob = testing::opposite_break_fixture();
  const MinMaxProcess obm = run_minmax(ob.series, ob.sar);
  if (obm.points != ob.points) f.add("opposite-break extrema differ");
  if (obm.open_candidate != ob.open_candidate) {
    f.add("opposite-break open candidate differs");
  }
  checked += ob.points.size();

  // Rise-fall-rise under the real MACD SAR: the warm-up high and the first
  // low are both fixed on the first turn of the independent reference SAR.
  const CandleSeries rfr = testing::rise_fall_rise_chart();
  const auto ref = testing::reference_sar(rfr.closes(), 1.0);
  std::size_t turn = 0;
  for (std::size_t i = 1; i < ref.size() && turn == 0; ++i) {
    if (ref[i - 1] != 0 && ref[i] != ref[i - 1]) turn = i;
  }
  const double close = rfr[turn].close;
  const std::vector<ExtremumPoint> want = {
      {ExtremumKind::kHigh, 120, 20, turn, close, 120 - close,
       FixReason::kInitial},
      {ExtremumKind::kLow, 104, 40, turn, close, close - 104,
       FixReason::kSarFlip}};
  const MinMaxProcess rm = run_minmax(rfr, ScalingConfig(1));
  if (rm.points != want) f.add("rise-fall-rise extrema differ");
  if (rm.open_candidate != Candidate{ExtremumKind::kHigh, 130, 70}) {
    f.add("rise-fall-rise open candidate differs");
  }
  checked += want.size();

  return f.outcome(format("hand-SAR, opposite-break and rise-fall-rise "
                          "fixtures, %zu exact values",
                          checked));
}

// --- 3 --------------------------------------------------------------------

Outcome estimator_recovery() {
  Failures f;
  std::mt19937_64 rng(20260101);
  std::normal_distribution<double> z(0.0, 1.0);
  const std::size_t n = 100'000;

  std::vector<double> xs(n);
  for (double& x : xs) x = std::exp(0.5 + 0.3 * z(rng));
  const LogNormalParams fit = lognormal_mle(xs);
  if (std::abs(fit.mu - 0.5) > 0.01 || std::abs(fit.sigma - 0.3) > 0.01) {
    f.add(format("mle (%.4f, %.4f)", fit.mu, fit.sigma));
  }
  std::string rhos;
  for (double rho : {-0.5, 0.0, 0.5}) {
    std::vector<std::pair<double, double>> pairs(n);
    for (auto& [x, d] : pairs) {
      const double z1 = z(rng);
      const double z2 = rho * z1 + std::sqrt(1 - rho * rho) * z(rng);
      x = std::exp(-0.4 + 0.5 * z1);
      d = std::exp(-1.7 + 0.6 * z2);
    }
    const double r = log_correlation(pairs);
    rhos += format(" %.4f", r);
    if (std::abs(r - rho) > 0.01) f.add(format("rho %.1f -> %.4f", rho, r));
  }
  return f.outcome(format("n = 1e5: (mu, sigma) = (%.4f, %.4f) for (0.5, 0.3); "
                          "rho for -0.5, 0, 0.5:%s",
                          fit.mu, fit.sigma, rhos.c_str()));
}

// --- 4 --------------------------------------------------------------------

Outcome anderson_darling_calibration() {
  Failures f;
  std::mt19937_64 rng(404);
  std::normal_distribution<double> z(0.0, 1.0);
  std::size_t rejected = 0;
  std::vector<double> xs(200);
  for (int rep = 0; rep < 500; ++rep) {
    for (double& x : xs) x = std::exp(-0.5 + 0.4 * z(rng));
    if (anderson_darling_lognormal(xs).p_value < 0.05) ++rejected;
  }
  const double rate = static_cast<double>(rejected) / 500.0;
  if (rate < 0.02 || rate > 0.09) f.add(format("null rate %.3f", rate));

  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> ys(10'000);
  for (double& y : ys) y = std::exp(u(rng));
  const double p = anderson_darling_lognormal(ys).p_value;
  if (!(p < 0.01)) f.add(format("exp(uniform) p = %.3g", p));
  return f.outcome(format("null rejection %.3f over 500 x n = 200; "
                          "exp(uniform) n = 1e4 p = %.3g",
                          rate, p));
}

// --- 5 --------------------------------------------------------------------

const std::vector<double> kGrid{0.1, 0.25, 0.382, 0.5, 0.618, 1.0};
const std::vector<BivariateLogNormalParams> kParamSets{
    {-0.35, -1.7, 0.5, 0.55, 0.35},
    {0.0, 0.0, 1.0, 1.0, 0.5},
    {-0.7, -1.2, 0.4, 0.3, -0.6},
};

// E(X | X >= a) by quadrature on the log scale, y = ln x - ln a.
double quadrature_truncated_mean(const LogNormalParams& p, double a) {
  boost::math::quadrature::exp_sinh<double> integrator;
  const double k = p.sigma * std::sqrt(2 * std::numbers::pi);
  auto num = [&](double y) {
    const double u = (std::log(a) + y - p.mu) / p.sigma;
    return std::exp(std::log(a) + y - 0.5 * u * u) / k;
  };
  auto den = [&](double y) {
    const double u = (std::log(a) + y - p.mu) / p.sigma;
    return std::exp(-0.5 * u * u) / k;
  };
  return integrator.integrate(num, 1e-13) / integrator.integrate(den, 1e-13);
}

Outcome moment_formulas() {
  Failures f;
  double worst_rel = 0, worst_z = 0;
  std::uint64_t seed = 500;
  for (const auto& p : kParamSets) {
    for (double a : kGrid) {
      const double got = truncated_lognormal_mean(p.x(), a);
      const double want = quadrature_truncated_mean(p.x(), a);
      const double rel = std::abs(got - want) / want;
      worst_rel = std::max(worst_rel, rel);
      if (rel > 1e-6) f.add(format("truncated mean a = %g rel %.2e", a, rel));
    }
    std::mt19937_64 rng(++seed);
    std::normal_distribution<double> z(0.0, 1.0);
    const double c = std::sqrt(1 - p.rho * p.rho);
    std::vector<std::pair<double, double>> draws(1'000'000);
    for (auto& [x, d] : draws) {
      const double z1 = z(rng);
      const double z2 = p.rho * z1 + c * z(rng);
      x = std::exp(p.mu_x + p.sigma_x * z1);
      d = std::exp(p.mu_d + p.sigma_d * z2);
    }
    for (double a : kGrid) {
      double sum = 0, sum2 = 0;
      std::size_t k = 0;
      for (const auto& [x, d] : draws) {
        if (x < a) continue;
        sum += d;
        sum2 += d * d;
        ++k;
      }
      const double mean = sum / static_cast<double>(k);
      const double se = std::sqrt((sum2 / static_cast<double>(k) - mean * mean) /
                                  static_cast<double>(k - 1));
      const double zs = (conditional_cross_mean(p, a) - mean) / se;
      if (std::abs(zs) > std::abs(worst_z)) worst_z = zs;
      if (std::abs(zs) > 3) f.add(format("cross mean a = %g z = %.2f", a, zs));
    }
  }
  return f.outcome(format("18 cells: truncated mean worst rel error %.1e vs "
                          "quadrature; cross mean worst |z| %.2f vs 1e6-draw MC",
                          worst_rel, std::abs(worst_z)));
}

// --- 6 --------------------------------------------------------------------

Outcome lemma_consistency() {
  Failures f;
  const BivariateLogNormalParams p = kParamSets[0];
  double worst_z = 0, worst_limit = 0;
  std::uint64_t seed = 600;
  for (double a : {0.2, 0.382, 0.5}) {
    for (double t : {0.8, 1.0, 1.5}) {
      const TradeSpec spec(a, t);
      const double analytic = expected_return(p, spec);
      const auto mc = simulate_expected_return(p, spec, 1'000'000, ++seed);
      const double zs = (analytic - mc.mean) / mc.std_error;
      if (std::abs(zs) > std::abs(worst_z)) worst_z = zs;
      if (std::abs(zs) > 3) f.add(format("a = %g t = %g z = %.2f", a, t, zs));
    }
    const double far = expected_return(p, TradeSpec(a, 1e6));
    const double reduced = truncated_lognormal_mean(p.x(), a) - a -
                           conditional_cross_mean(p, a);
    worst_limit = std::max(worst_limit, std::abs(far - reduced));
    if (std::abs(far - reduced) > 1e-6) {
      f.add(format("t -> inf at a = %g off by %.2e", a, far - reduced));
    }
  }
  return f.outcome(format("9 (a, t) cells: worst |z| %.2f vs 1e6-draw MC; "
                          "t = 1e6 reduction error %.1e",
                          std::abs(worst_z), worst_limit));
}

// --- 7 --------------------------------------------------------------------

Outcome published_defaults() {
  Failures f;
  const HistogramSpec h = cli::default_histogram(TrendVariable::kRetracement);
  if (h.lo != 0 || h.hi != 5 || h.bin_width != 0.11) {
    f.add(format("retracement histogram %g-%g/%g", h.lo, h.hi, h.bin_width));
  }
  const HistogramSpec core_default;
  if (core_default.lo != 0 || core_default.hi != 5 ||
      core_default.bin_width != 0.11) {
    f.add("HistogramSpec{} is not 0-5/0.11");
  }
  const ScalingConfig s2(2);
  if (s2.fast() != 24 || s2.slow() != 52 || s2.signal() != 18) {
    f.add(format("scaling 2 -> %g/%g/%g", s2.fast(), s2.slow(), s2.signal()));
  }
  const auto cells = cli::SweepRange{}.cells();
  if (cells.size() != 46 || cells.front() != 0.5 ||
      std::abs(cells.back() - 5.0) > 1e-12) {
    f.add(format("sweep default has %zu cells", cells.size()));
  }
  const auto parsed = cli::parse_sweep("0.5:5:0.1").cells();
  if (parsed.size() != 46) f.add("parsed 0.5:5:0.1 is not 46 cells");
  return f.outcome(format("histogram %g-%g/%g (%zu bins); scaling 2 -> "
                          "%g/%g/%g; sweep 0.5:5:0.1 -> %zu cells",
                          h.lo, h.hi, h.bin_width, h.bins(), s2.fast(),
                          s2.slow(), s2.signal(), cells.size()));
}

// --- 8 --------------------------------------------------------------------

// 50 planted series written as candle files, pooled as one market and run
// through the CLI stats command.
Outcome synthetic_closure() {
  namespace fs = std::filesystem;
  const PlantedTrendSpec base;
  const fs::path dir = fs::temp_directory_path() / "dowtrend_acceptance" /
                       "PLANTED";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (std::uint64_t rep = 0; rep < 50; ++rep) {
    PlantedTrendSpec spec = base;
    spec.seed = 8000 + rep;
    spec.symbol = format("P%02llu", static_cast<unsigned long long>(rep));
    std::ofstream out(dir / (spec.symbol + ".csv"));
    write_candles(out, synth_planted_trend(spec).series);
  }
  const std::string input = dir.string();
  const char* argv[] = {"dowtrend", "stats", "--input", input.c_str(),
                        "--scaling", "1", "--direction", "up",
                        "--variable", "retracement"};
  std::ostringstream out, err;
  const int code = cli::run(10, argv, out, err);
  fs::remove_all(dir.parent_path());
  if (code != 0) return {false, "stats failed: " + err.str()};
  const auto report = nlohmann::json::parse(out.str());
  const auto& cell = report["fits"][0];
  const auto n = cell["n"].get<std::size_t>();
  const double mu = cell["mu"].get<double>();
  const double sigma = cell["sigma"].get<double>();
  const double se = sigma / std::sqrt(static_cast<double>(n));
  const double zs = (mu - base.retracement.mu) / se;
  const std::string summary =
      format("planted mu %.3f: pooled mu %.4f, sigma %.4f, n %zu, "
             "bias %+.4f = %+.2f SE",
             base.retracement.mu, mu, sigma, n, mu - base.retracement.mu, zs);
  return {std::abs(zs) <= 3, summary};
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace dowtrend

int main() {
  using namespace dowtrend;
  const std::vector<Criterion> criteria{
      {1, "MinMax alternation and causality", 60,
       minmax_alternation_and_causality},
      {2, "Fixture fidelity", 0, fixture_fidelity},
      {3, "Estimator recovery", 5, estimator_recovery},
      {4, "Anderson-Darling calibration and power", 30,
       anderson_darling_calibration},
      {5, "Moment formulas vs oracles", 60, moment_formulas},
      {6, "Expected-return lemma consistency", 0, lemma_consistency},
      {7, "Published defaults", 0, published_defaults},
      {8, "End-to-end synthetic closure", 120, synthetic_closure},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::string timing = format("%.2f s", secs);
    if (c.budget_s > 0) {
      timing += format(" of %.0f s", c.budget_s);
      if (secs > c.budget_s) {
        o.pass = false;
        o.detail += "; over time budget";
      }
    }
    std::printf("AC%d %s  %s: %s [%s]\n", c.id, o.pass ? "PASS" : "FAIL",
                c.title, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
