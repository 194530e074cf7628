#include "fattail/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fattail/distributions.hpp"
#include "fattail/error.hpp"

namespace fattail {
namespace {

constexpr int kMaxEmIterations = 10'000;
constexpr double kEmRelativeTolerance = 1e-10;

double median_of(std::vector<double> v) {
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  double m = *mid;
  if (v.size() % 2 == 0) {
    m = 0.5 * (m + *std::max_element(v.begin(), mid));
  }
  return m;
}

// Robust starting point: median and normal-consistent MAD.
LocationScale robust_start(std::span<const double> samples, double sd) {
  std::vector<double> v(samples.begin(), samples.end());
  const double med = median_of(v);
  for (double& x : v) x = std::abs(x - med);
  double mad = 1.4826 * median_of(std::move(v));
  if (!(mad > 0.0)) mad = sd;
  return {med, mad};
}

}  // namespace

double t_log_likelihood(std::span<const double> samples, double nu, double loc,
                        double scale) {
  if (!(nu > 0.0) || !(scale > 0.0)) {
    throw Error(Module::stats, "invalid t parameters");
  }
  const double n = static_cast<double>(samples.size());
  const double constant = std::lgamma(0.5 * (nu + 1.0)) -
                          std::lgamma(0.5 * nu) -
                          0.5 * std::log(nu * std::numbers::pi) -
                          std::log(scale);
  double kernel = 0.0;
  for (double x : samples) {
    const double z = (x - loc) / scale;
    kernel += std::log1p(z * z / nu);
  }
  return n * constant - 0.5 * (nu + 1.0) * kernel;
}

LocationScale fit_t_location_scale(std::span<const double> samples, double nu,
                                   LocationScale start) {
  const double n = static_cast<double>(samples.size());
  double loc = start.location;
  double scale = start.scale;
  for (int iter = 0; iter < kMaxEmIterations; ++iter) {
    double sum_w = 0.0;
    double sum_wx = 0.0;
    for (double x : samples) {
      const double z = (x - loc) / scale;
      const double w = (nu + 1.0) / (nu + z * z);
      sum_w += w;
      sum_wx += w * x;
    }
    const double next_loc = sum_wx / sum_w;
    double sum_wd2 = 0.0;
    for (double x : samples) {
      const double z = (x - loc) / scale;
      const double w = (nu + 1.0) / (nu + z * z);
      const double d = x - next_loc;
      sum_wd2 += w * d * d;
    }
    const double next_scale = std::sqrt(sum_wd2 / n);
    if (!(next_scale > 0.0) || !std::isfinite(next_loc)) {
      throw Error(Module::stats, "t fit collapsed to zero scale");
    }
    const double tol = kEmRelativeTolerance * next_scale;
    const bool done = std::abs(next_loc - loc) <= tol &&
                      std::abs(next_scale - scale) <= tol;
    loc = next_loc;
    scale = next_scale;
    if (done) return {loc, scale};
  }
  throw Error(Module::stats, "t location/scale iteration did not converge");
}

TFit fit_t_mle(std::span<const double> samples) {
  if (samples.empty()) throw Error(Module::stats, "empty sample");
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  if (*lo_it == *hi_it) {
    throw Error(Module::stats, "degenerate series: zero spread");
  }
  if (samples.size() < kMinFitSamples) {
    throw Error(Module::stats, "insufficient samples for t fit (need >= " +
                                   std::to_string(kMinFitSamples) + ", got " +
                                   std::to_string(samples.size()) + ")");
  }

  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : samples) var += (x - mean) * (x - mean);
  const double sd = std::sqrt(var / n);

  // Warm-started profile: each candidate nu starts EM from the previous
  // candidate's solution. The golden-section sequence is fixed, so the
  // result is deterministic.
  LocationScale state = robust_start(samples, sd);
  const auto profile = [&](double nu) {
    state = fit_t_location_scale(samples, nu, state);
    return t_log_likelihood(samples, nu, state.location, state.scale);
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = kNuMin;
  double b = kNuMax;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = profile(c);
  double fd = profile(d);
  while (b - a > kNuTolerance) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = profile(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = profile(d);
    }
  }

  TFit fit;
  fit.nu = 0.5 * (a + b);
  state = fit_t_location_scale(samples, fit.nu, state);
  fit.location = state.location;
  fit.scale = state.scale;
  fit.log_likelihood = t_log_likelihood(samples, fit.nu, fit.location, fit.scale);
  fit.normal_limit = b == kNuMax;
  fit.mean_over_std = mean / sd;
  fit.n = samples.size();

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  fit.correlation = cdf_correlation(sorted, fit.nu, fit.location, fit.scale);
  return fit;
}

TFit fit_t_mle(const Series& s) { return fit_t_mle(s.values()); }

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(Module::stats, "correlation requires equal-length vectors");
  }
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (!(saa > 0.0) || !(sbb > 0.0)) {
    throw Error(Module::stats, "correlation of a zero-variance vector");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double cdf_correlation(std::span<const double> sorted, double nu, double loc,
                       double scale) {
  if (sorted.size() < 3) {
    throw Error(Module::stats, "cdf correlation requires at least 3 samples");
  }
  const double n = static_cast<double>(sorted.size());
  std::vector<double> empirical(sorted.size());
  std::vector<double> fitted(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    empirical[i] = (static_cast<double>(i) + 0.5) / n;
    fitted[i] = t_cdf(sorted[i], nu, loc, scale);
  }
  return pearson(empirical, fitted);
}

double cdf_correlation(const EmpiricalDist& d, const TFit& fit) {
  return cdf_correlation(d.sorted_samples, fit.nu, fit.location, fit.scale);
}

}  // namespace fattail
