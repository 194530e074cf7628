#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fattail/series.hpp"

namespace fattail {

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  std::size_t count = 0;
};

struct EcdfPoint {
  double value = 0.0;
  double probability = 0.0;
};

/// Sorted samples, moments, histogram and ECDF of one dataset.
/// Moments use the population (1/n) convention. skewness and
/// excess_kurtosis are reported as 0 when stddev == 0.
struct EmpiricalDist {
  std::vector<double> sorted_samples;
  std::size_t n = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  std::vector<HistogramBin> histogram;
  /// ecdf[i] = (x_(i+1), (i+1)/n).
  std::vector<EcdfPoint> ecdf;
};

/// Freedman-Diaconis bin count clamped to [16, 512]; 1 when the range is zero.
std::size_t freedman_diaconis_bins(const std::vector<double>& sorted);

/// Linear-interpolation quantile of sorted data, p in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double p);

EmpiricalDist summarize(const Series& s,
                        std::optional<std::size_t> bins = std::nullopt);

/// (s - mean) / std. Throws "degenerate series" when all samples are equal.
Series normalize(const Series& s);

/// Empirical two-sided tail mass beyond k standard deviations divided by
/// the normal prediction 2 (1 - Phi(k)). Values above 1 indicate fat tails.
double tail_excess(const EmpiricalDist& d, double k);

}  // namespace fattail
