#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fattail/series.hpp"
#include "fattail/stats.hpp"

namespace fattail {

/// Search interval for the degrees of freedom.
inline constexpr double kNuMin = 0.1;
inline constexpr double kNuMax = 200.0;
inline constexpr double kNuTolerance = 1e-4;
inline constexpr std::size_t kMinFitSamples = 100;

/// Maximum-likelihood location-scale Student t fit plus goodness metrics.
struct TFit {
  double nu = 0.0;
  double location = 0.0;
  double scale = 0.0;
  double log_likelihood = 0.0;
  /// Pearson correlation of empirical vs fitted CDF at the order statistics.
  double correlation = 0.0;
  /// Raw-sample mean / population std.
  double mean_over_std = 0.0;
  std::size_t n = 0;
  /// Set when the optimum sits on the upper nu bound (indistinguishable
  /// from normal at this sample size).
  bool normal_limit = false;
  /// How the samples were produced, when known. Filled in by the pipeline.
  std::optional<DiffSpec> diff_spec;
};

/// Sum of t_log_pdf over the samples.
double t_log_likelihood(std::span<const double> samples, double nu,
                        double loc, double scale);

/// For fixed nu, maximizes the likelihood over (loc, scale) with the EM
/// reweighting iteration w = (nu + 1) / (nu + z^2), starting from the given
/// values. Stops when both parameters move by less than 1e-10 * scale.
/// Throws after 10^4 iterations.
struct LocationScale {
  double location = 0.0;
  double scale = 1.0;
};
LocationScale fit_t_location_scale(std::span<const double> samples, double nu,
                                   LocationScale start);

/// Joint MLE over (nu, loc, scale): golden-section search for nu on the
/// profile likelihood over [kNuMin, kNuMax], EM for (loc, scale) at each
/// candidate. Requires >= kMinFitSamples samples that are not all equal.
TFit fit_t_mle(std::span<const double> samples);
TFit fit_t_mle(const Series& s);

/// Pearson correlation between the plotting positions (i - 0.5) / n and the
/// fitted t CDF at the order statistics. Requires d.n >= 3.
double cdf_correlation(const EmpiricalDist& d, const TFit& fit);

/// Same, on already-sorted samples.
double cdf_correlation(std::span<const double> sorted, double nu, double loc,
                       double scale);

/// Pearson correlation; throws if either vector has zero variance.
double pearson(std::span<const double> a, std::span<const double> b);

}  // namespace fattail
