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

// Log-normal modelling of trend variables: maximum-likelihood fits,
// Anderson-Darling goodness of fit on the log scale, the bivariate density,
// and the truncated moments used to price the anti-cyclic trade.

#ifndef DOWTREND_STATS_H_
#define DOWTREND_STATS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dowtrend {

struct LogNormalParams {
  double mu = 0;
  double sigma = 0;  // >= 0
};

struct BivariateLogNormalParams {
  double mu_x = 0;
  double mu_d = 0;
  double sigma_x = 1;
  double sigma_d = 1;
  double rho = 0;

  LogNormalParams x() const { return {mu_x, sigma_x}; }
  LogNormalParams d() const { return {mu_d, sigma_d}; }
};

// Throws std::invalid_argument unless sigmas > 0 and |rho| < 1.
void validate(const BivariateLogNormalParams& p);

// Survival probabilities below this are treated as underflow.
inline constexpr double kMinSurvival = 1e-300;

class TailTooDeepError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// 1/n estimators: mu = mean(ln x), sigma^2 = mean((ln x - mu)^2).
// Throws std::invalid_argument on empty input or any sample <= 0.
LogNormalParams lognormal_mle(std::span<const double> samples);

struct LogNormalMoments {
  double median = 0;  // e^mu
  double mean = 0;    // e^(mu + sigma^2 / 2)
};

LogNormalMoments lognormal_moments(const LogNormalParams& p);

double lognormal_pdf(double x, const LogNormalParams& p);

// Phi((ln x - mu) / sigma) for x > 0 and 0 for x <= 0. With sigma == 0 the
// distribution is a point mass: 0 below e^mu, 1 at or above.
double lognormal_cdf(double x, const LogNormalParams& p);

// 1 - lognormal_cdf, evaluated on the upper tail directly.
double lognormal_survival(double x, const LogNormalParams& p);

struct AndersonDarlingResult {
  std::size_t n = 0;
  double a2 = 0;       // A^2
  double a2_star = 0;  // A^2 (1 + 0.75/n + 2.25/n^2)
  double p_value = 0;
  // True if any z value had to be clamped into [1e-12, 1 - 1e-12].
  bool clamped = false;
};

inline constexpr std::size_t kMinAndersonDarlingSamples = 8;

// Normality test of ln x with mean and (n-1) variance estimated from the
// data. p-value from the modified statistic A^2* via the four-branch
// D'Agostino-Stephens approximation for the both-parameters-estimated case.
// Throws std::invalid_argument for n < 8 or samples <= 0 and
// std::domain_error when the logs have zero variance.
AndersonDarlingResult anderson_darling_lognormal(
    std::span<const double> samples);

// Upper-tail p-value for the modified statistic A^2*.
double anderson_darling_pvalue(double a2_star);

// Correlation of (ln x, ln d) with the 1/n estimators throughout. Throws
// std::invalid_argument for n < 2, non-positive values or zero variance.
double log_correlation(std::span<const std::pair<double, double>> pairs);

// Joint density of (X, D) when (ln X, ln D) is bivariate normal. Zero
// outside x > 0, d > 0.
double bivariate_lognormal_density(double x, double d,
                                   const BivariateLogNormalParams& p);

// E(X | X >= a) = e^(mu + sigma^2/2) Phi((mu + sigma^2 - ln a)/sigma)
//                 / Phi((mu - ln a)/sigma).
// Throws std::invalid_argument unless sigma > 0 and a > 0, and
// TailTooDeepError when the survival probability underflows kMinSurvival.
double truncated_lognormal_mean(const LogNormalParams& p, double a);

// E(D | X >= a) = e^(mu_d + sigma_d^2/2)
//                 Phi((mu_x + rho sigma_x sigma_d - ln a)/sigma_x)
//                 / Phi((mu_x - ln a)/sigma_x).
double conditional_cross_mean(const BivariateLogNormalParams& p, double a);

struct HistogramSpec {
  double lo = 0;
  double hi = 5;
  double bin_width = 0.11;

  // ceil((hi - lo) / bin_width); the last bin may be cut short at hi.
  std::size_t bins() const;
  // Throws std::invalid_argument unless lo < hi and bin_width > 0.
  void validate() const;
};

struct Histogram {
  HistogramSpec spec;
  std::vector<std::size_t> counts;
  // counts / (total * bin_width)
  std::vector<double> density;
  std::size_t out_of_range = 0;
  std::size_t total = 0;

  double bin_lo(std::size_t i) const;
};

// Half-open bins [lo + i w, lo + (i+1) w); a value on an edge goes to the
// upper bin and values outside [lo, hi) only increase out_of_range.
Histogram histogram(std::span<const double> samples, const HistogramSpec& spec);

// Fit plus goodness of fit for one cell of the report.
struct FitReport {
  std::string variable;
  std::string direction;
  std::string market;
  double scaling = 0;
  std::size_t n = 0;
  LogNormalParams params;
  LogNormalMoments moments;
  // Absent when n < 8.
  std::optional<AndersonDarlingResult> ad;
};

// MLE, moments, and the Anderson-Darling test when n >= 8. Labels are left
// empty for the caller.
FitReport fit_lognormal(std::span<const double> samples);

}  // namespace dowtrend

#endif  // DOWTREND_STATS_H_
