#ifndef RCMA_STATS_HPP
#define RCMA_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rcma {

inline double mean(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

// Unbiased sample variance (divisor n-1).
inline double variance(std::span<const double> x) {
  if (x.size() < 2) throw std::invalid_argument("variance: need at least 2 samples");
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

inline double std_error_of_mean(std::span<const double> x) {
  return std::sqrt(variance(x) / static_cast<double>(x.size()));
}

// Asymptotic standard error of the sample variance, sqrt((m4 - s^4)/n) with
// m4 the fourth central moment. Valid for any underlying law with finite
// eighth moment; used to build Monte Carlo tolerance bands.
inline double std_error_of_variance(std::span<const double> x) {
  const double m = mean(x);
  const double s2 = variance(x);
  double m4 = 0.0;
  for (double v : x) {
    const double d = v - m;
    m4 += d * d * d * d;
  }
  m4 /= static_cast<double>(x.size());
  const double var_of_var = (m4 - s2 * s2) / static_cast<double>(x.size());
  return std::sqrt(std::max(var_of_var, 0.0));
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Kolmogorov survival function Q(t) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 t^2).
inline double kolmogorov_sf(double t) {
  if (t <= 0.0) return 1.0;
  double s = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = 2.0 * std::exp(-2.0 * static_cast<double>(j) * static_cast<double>(j) * t * t);
    s += (j % 2 == 1) ? term : -term;
    if (term < 1e-12) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

// One-sample KS statistic against a CDF supplied as a callable.
template <typename Cdf>
double ks_statistic(std::vector<double> x, Cdf&& cdf) {
  if (x.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

// Asymptotic KS p-value for a fully specified null CDF.
template <typename Cdf>
double ks_pvalue(const std::vector<double>& x, Cdf&& cdf) {
  const double d = ks_statistic(x, cdf);
  return kolmogorov_sf(d * std::sqrt(static_cast<double>(x.size())));
}

// KS test against a normal law with mean/variance estimated from the data.
// The p-value uses the standard Kolmogorov asymptotics, which is
// conservative relative to Lilliefors critical values (its p is an upper
// bound for the fitted-parameter test); acceptable for our pass/fail use
// at level 0.01.
inline double ks_pvalue_fitted_normal(const std::vector<double>& x) {
  const double m = mean(x);
  const double sd = std::sqrt(variance(x));
  if (!(sd > 0.0)) return 0.0;
  return ks_pvalue(x, [m, sd](double v) { return normal_cdf((v - m) / sd); });
}

// Two-sample KS test (asymptotic p-value).
inline double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return kolmogorov_sf(d * std::sqrt(na * nb / (na + nb)));
}

}  // namespace rcma

#endif  // RCMA_STATS_HPP
