#include "fattail/stats.hpp"

#include <algorithm>
#include <cmath>

#include "fattail/distributions.hpp"
#include "fattail/error.hpp"

namespace fattail {
namespace {

constexpr std::size_t kMinBins = 16;
constexpr std::size_t kMaxBins = 512;

struct Moments {
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
};

// Two-pass mean with a correction term, then central moments.
Moments central_moments(std::span<const double> v) {
  const double n = static_cast<double>(v.size());
  double sum = 0.0;
  for (double x : v) sum += x;
  double mean = sum / n;
  double correction = 0.0;
  for (double x : v) correction += x - mean;
  mean += correction / n;

  Moments m;
  m.mean = mean;
  for (double x : v) {
    const double d = x - mean;
    const double d2 = d * d;
    m.m2 += d2;
    m.m3 += d2 * d;
    m.m4 += d2 * d2;
  }
  m.m2 /= n;
  m.m3 /= n;
  m.m4 /= n;
  return m;
}

bool all_equal(std::span<const double> v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) ==
         v.end();
}

}  // namespace

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw Error(Module::stats, "quantile of empty data");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::size_t freedman_diaconis_bins(const std::vector<double>& sorted) {
  if (sorted.empty()) return 1;
  const double range = sorted.back() - sorted.front();
  if (range == 0.0) return 1;
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  const double width =
      2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
  if (!(width > 0.0)) return kMaxBins;
  const double count = std::ceil(range / width);
  if (count >= static_cast<double>(kMaxBins)) return kMaxBins;
  return std::clamp(static_cast<std::size_t>(count), kMinBins, kMaxBins);
}

EmpiricalDist summarize(const Series& s, std::optional<std::size_t> bins) {
  if (s.empty()) throw Error(Module::stats, "empty series");
  if (bins && *bins == 0) throw Error(Module::stats, "bin count must be positive");

  EmpiricalDist d;
  d.sorted_samples.assign(s.begin(), s.end());
  std::sort(d.sorted_samples.begin(), d.sorted_samples.end());
  d.n = d.sorted_samples.size();

  const Moments m = central_moments(s.values());
  d.mean = m.mean;
  if (!all_equal(d.sorted_samples)) {
    d.stddev = std::sqrt(m.m2);
    if (m.m2 > 0.0) {
      d.skewness = m.m3 / std::pow(m.m2, 1.5);
      d.excess_kurtosis = m.m4 / (m.m2 * m.m2) - 3.0;
    }
  }

  const double lo = d.sorted_samples.front();
  const double hi = d.sorted_samples.back();
  const std::size_t nbins =
      hi == lo ? 1 : bins.value_or(freedman_diaconis_bins(d.sorted_samples));
  const double width = (hi - lo) / static_cast<double>(nbins);
  d.histogram.resize(nbins);
  for (std::size_t b = 0; b < nbins; ++b) {
    d.histogram[b].left = lo + width * static_cast<double>(b);
    d.histogram[b].right =
        b + 1 == nbins ? hi : lo + width * static_cast<double>(b + 1);
  }
  for (double x : d.sorted_samples) {
    std::size_t b = width > 0.0 ? static_cast<std::size_t>((x - lo) / width) : 0;
    b = std::min(b, nbins - 1);
    // Guard against rounding placing x one bin off the stored edges.
    while (b > 0 && x < d.histogram[b].left) --b;
    while (b + 1 < nbins && x >= d.histogram[b + 1].left) ++b;
    ++d.histogram[b].count;
  }

  d.ecdf.resize(d.n);
  const double n = static_cast<double>(d.n);
  for (std::size_t i = 0; i < d.n; ++i) {
    d.ecdf[i] = {d.sorted_samples[i], static_cast<double>(i + 1) / n};
  }
  return d;
}

Series normalize(const Series& s) {
  if (s.empty() || all_equal(s.values())) {
    throw Error(Module::stats, "degenerate series");
  }
  const Moments m = central_moments(s.values());
  const double sd = std::sqrt(m.m2);
  if (!(sd > 0.0)) throw Error(Module::stats, "degenerate series");
  std::vector<double> out;
  out.reserve(s.size());
  for (double x : s) out.push_back((x - m.mean) / sd);
  return Series(std::move(out), s.dt(), "normalized(" + s.label() + ")");
}

double tail_excess(const EmpiricalDist& d, double k) {
  if (!(k > 0.0)) throw Error(Module::stats, "tail threshold k must be positive");
  if (d.n == 0 || !(d.stddev > 0.0)) {
    throw Error(Module::stats, "degenerate distribution");
  }
  const double cut = k * d.stddev;
  std::size_t beyond = 0;
  for (double x : d.sorted_samples) {
    if (std::abs(x - d.mean) > cut) ++beyond;
  }
  const double empirical = static_cast<double>(beyond) / static_cast<double>(d.n);
  const double normal = 2.0 * normal_cdf(-k);
  return empirical / normal;
}

}  // namespace fattail
