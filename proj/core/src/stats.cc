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

#include "dowtrend/stats.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dowtrend/normal.h"

namespace dowtrend {
namespace {

constexpr double kZClamp = 1e-12;

void require_positive(std::span<const double> samples, const char* who) {
  for (double x : samples) {
    if (!(x > 0) || !std::isfinite(x)) {
      throw std::invalid_argument(std::string(who) +
                                  ": samples must be positive and finite");
    }
  }
}

void require_truncation(const LogNormalParams& p, double a, const char* who) {
  if (!(p.sigma > 0)) {
    throw std::invalid_argument(std::string(who) + ": sigma must be > 0");
  }
  if (!(a > 0)) {
    throw std::invalid_argument(std::string(who) + ": a must be > 0");
  }
}

// P(X >= a), guarded against underflow.
double survival_or_throw(const LogNormalParams& p, double a, const char* who) {
  const double s = normal_cdf((p.mu - std::log(a)) / p.sigma);
  if (!(s >= kMinSurvival)) {
    throw TailTooDeepError(std::string(who) + ": tail too deep");
  }
  return s;
}

}  // namespace

void validate(const BivariateLogNormalParams& p) {
  if (!(p.sigma_x > 0) || !(p.sigma_d > 0)) {
    throw std::invalid_argument("bivariate log-normal: sigmas must be > 0");
  }
  if (!(std::abs(p.rho) < 1)) {
    throw std::invalid_argument("bivariate log-normal: |rho| must be < 1");
  }
  if (!std::isfinite(p.mu_x) || !std::isfinite(p.mu_d)) {
    throw std::invalid_argument("bivariate log-normal: mu must be finite");
  }
}

LogNormalParams lognormal_mle(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("lognormal_mle: no samples");
  require_positive(samples, "lognormal_mle");
  const double n = static_cast<double>(samples.size());
  double mu = 0;
  for (double x : samples) mu += std::log(x);
  mu /= n;
  double var = 0;
  for (double x : samples) {
    const double dev = std::log(x) - mu;
    var += dev * dev;
  }
  return {mu, std::sqrt(var / n)};
}

LogNormalMoments lognormal_moments(const LogNormalParams& p) {
  return {std::exp(p.mu), std::exp(p.mu + 0.5 * p.sigma * p.sigma)};
}

double lognormal_pdf(double x, const LogNormalParams& p) {
  if (!(x > 0) || !(p.sigma > 0)) return 0.0;
  const double z = (std::log(x) - p.mu) / p.sigma;
  return normal_pdf(z) / (p.sigma * x);
}

double lognormal_cdf(double x, const LogNormalParams& p) {
  if (!(x > 0)) return 0.0;
  if (p.sigma == 0) return std::log(x) >= p.mu ? 1.0 : 0.0;
  return normal_cdf((std::log(x) - p.mu) / p.sigma);
}

double lognormal_survival(double x, const LogNormalParams& p) {
  if (!(x > 0)) return 1.0;
  if (p.sigma == 0) return std::log(x) >= p.mu ? 0.0 : 1.0;
  return normal_cdf((p.mu - std::log(x)) / p.sigma);
}

double anderson_darling_pvalue(double a2_star) {
  const double a = a2_star;
  double p;
  if (a < 0.2) {
    p = 1.0 - std::exp(-13.436 + 101.14 * a - 223.73 * a * a);
  } else if (a < 0.34) {
    p = 1.0 - std::exp(-8.318 + 42.796 * a - 59.938 * a * a);
  } else if (a < 0.6) {
    p = std::exp(0.9177 - 4.279 * a - 1.38 * a * a);
  } else {
    // The quadratic turns upward past its minimum at 5.709 / (2 * 0.0186);
    // hold it there so p stays monotone in the statistic.
    const double capped = std::min(a, 5.709 / (2 * 0.0186));
    p = std::exp(1.2937 - 5.709 * capped + 0.0186 * capped * capped);
  }
  return std::clamp(p, 0.0, 1.0);
}

AndersonDarlingResult anderson_darling_lognormal(
    std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < kMinAndersonDarlingSamples) {
    throw std::invalid_argument("anderson_darling_lognormal: need n >= 8");
  }
  require_positive(samples, "anderson_darling_lognormal");

  std::vector<double> y(n);
  std::transform(samples.begin(), samples.end(), y.begin(),
                 [](double x) { return std::log(x); });
  std::sort(y.begin(), y.end());
  const double nd = static_cast<double>(n);
  double mean = 0;
  for (double v : y) mean += v;
  mean /= nd;
  double ss = 0;
  for (double v : y) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (nd - 1));
  if (!(sd > 0)) {
    throw std::domain_error("anderson_darling_lognormal: zero variance");
  }

  AndersonDarlingResult r;
  r.n = n;
  auto clamp_z = [&](double z) {
    if (z < kZClamp || z > 1 - kZClamp) {
      r.clamped = true;
      return std::clamp(z, kZClamp, 1 - kZClamp);
    }
    return z;
  };
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lower = clamp_z(normal_cdf((y[i] - mean) / sd));
    // 1 - z_(n+1-i), taken from the upper tail directly.
    const double upper = clamp_z(normal_cdf(-(y[n - 1 - i] - mean) / sd));
    sum += static_cast<double>(2 * i + 1) * (std::log(lower) + std::log(upper));
  }
  r.a2 = -nd - sum / nd;
  r.a2_star = r.a2 * (1.0 + 0.75 / nd + 2.25 / (nd * nd));
  r.p_value = anderson_darling_pvalue(r.a2_star);
  return r;
}

double log_correlation(std::span<const std::pair<double, double>> pairs) {
  const std::size_t n = pairs.size();
  if (n < 2) throw std::invalid_argument("log_correlation: need n >= 2");
  double mx = 0, md = 0;
  for (const auto& [x, d] : pairs) {
    if (!(x > 0) || !(d > 0)) {
      throw std::invalid_argument("log_correlation: values must be positive");
    }
    mx += std::log(x);
    md += std::log(d);
  }
  const double nd = static_cast<double>(n);
  mx /= nd;
  md /= nd;
  double sxx = 0, sdd = 0, sxd = 0;
  for (const auto& [x, d] : pairs) {
    const double dx = std::log(x) - mx;
    const double dd = std::log(d) - md;
    sxx += dx * dx;
    sdd += dd * dd;
    sxd += dx * dd;
  }
  if (!(sxx > 0) || !(sdd > 0)) {
    throw std::invalid_argument("log_correlation: zero variance");
  }
  const double rho = (sxd / nd) / (std::sqrt(sxx / nd) * std::sqrt(sdd / nd));
  return std::clamp(rho, -1.0, 1.0);
}

double bivariate_lognormal_density(double x, double d,
                                   const BivariateLogNormalParams& p) {
  validate(p);
  if (!(x > 0) || !(d > 0)) return 0.0;
  const double one_minus_rho2 = 1.0 - p.rho * p.rho;
  const double u = (std::log(x) - p.mu_x) / p.sigma_x;
  const double v = (std::log(d) - p.mu_d) / p.sigma_d;
  const double q = (u * u + v * v - 2.0 * p.rho * u * v) / one_minus_rho2;
  const double norm = 2.0 * std::numbers::pi * x * d * p.sigma_x * p.sigma_d *
                      std::sqrt(one_minus_rho2);
  return std::exp(-0.5 * q) / norm;
}

double truncated_lognormal_mean(const LogNormalParams& p, double a) {
  require_truncation(p, a, "truncated_lognormal_mean");
  const double survival = survival_or_throw(p, a, "truncated_lognormal_mean");
  const double shifted =
      normal_cdf((p.mu + p.sigma * p.sigma - std::log(a)) / p.sigma);
  return std::exp(p.mu + 0.5 * p.sigma * p.sigma) * shifted / survival;
}

double conditional_cross_mean(const BivariateLogNormalParams& p, double a) {
  validate(p);
  require_truncation(p.x(), a, "conditional_cross_mean");
  const double survival =
      survival_or_throw(p.x(), a, "conditional_cross_mean");
  const double shifted = normal_cdf(
      (p.mu_x + p.rho * p.sigma_x * p.sigma_d - std::log(a)) / p.sigma_x);
  return std::exp(p.mu_d + 0.5 * p.sigma_d * p.sigma_d) * shifted / survival;
}

std::size_t HistogramSpec::bins() const {
  validate();
  const double raw = (hi - lo) / bin_width;
  auto n = static_cast<std::size_t>(std::ceil(raw));
  // Guard against (hi - lo) / w landing a hair above an integer.
  if (n > 1 && lo + static_cast<double>(n - 1) * bin_width >= hi) --n;
  return std::max<std::size_t>(n, 1);
}

void HistogramSpec::validate() const {
  if (!(lo < hi) || !(bin_width > 0) || !std::isfinite(lo) ||
      !std::isfinite(hi)) {
    throw std::invalid_argument("histogram: need lo < hi and bin_width > 0");
  }
}

double Histogram::bin_lo(std::size_t i) const {
  return spec.lo + static_cast<double>(i) * spec.bin_width;
}

Histogram histogram(std::span<const double> samples, const HistogramSpec& spec) {
  Histogram h;
  h.spec = spec;
  const std::size_t bins = spec.bins();
  h.counts.assign(bins, 0);
  h.total = samples.size();
  for (double x : samples) {
    if (!(x >= spec.lo) || !(x < spec.hi)) {
      ++h.out_of_range;
      continue;
    }
    auto i = static_cast<std::size_t>(std::floor((x - spec.lo) / spec.bin_width));
    // Edges are lo + k * w as computed by bin_lo; settle rounding against
    // them so a value on an edge lands in the upper bin.
    while (i + 1 < bins && h.bin_lo(i + 1) <= x) ++i;
    while (i > 0 && h.bin_lo(i) > x) --i;
    if (i >= bins) i = bins - 1;
    ++h.counts[i];
  }
  h.density.resize(bins);
  const double scale =
      h.total == 0 ? 0.0 : 1.0 / (static_cast<double>(h.total) * spec.bin_width);
  for (std::size_t i = 0; i < bins; ++i) {
    h.density[i] = static_cast<double>(h.counts[i]) * scale;
  }
  return h;
}

FitReport fit_lognormal(std::span<const double> samples) {
  FitReport r;
  r.n = samples.size();
  r.params = lognormal_mle(samples);
  r.moments = lognormal_moments(r.params);
  if (r.n >= kMinAndersonDarlingSamples && r.params.sigma > 0) {
    r.ad = anderson_darling_lognormal(samples);
  }
  return r;
}

}  // namespace dowtrend
