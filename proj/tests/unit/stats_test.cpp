#include "fattail/stats.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "fattail/error.hpp"
#include "oracles.hpp"

namespace fattail {
namespace {

void expect_dist_invariants(const EmpiricalDist& d) {
  ASSERT_EQ(d.sorted_samples.size(), d.n);
  EXPECT_TRUE(std::is_sorted(d.sorted_samples.begin(), d.sorted_samples.end()));
  ASSERT_EQ(d.ecdf.size(), d.n);
  double prev = 0.0;
  for (std::size_t i = 0; i < d.n; ++i) {
    EXPECT_GE(d.ecdf[i].probability, prev);
    EXPECT_GT(d.ecdf[i].probability, 0.0);
    EXPECT_LE(d.ecdf[i].probability, 1.0);
    EXPECT_EQ(d.ecdf[i].value, d.sorted_samples[i]);
    prev = d.ecdf[i].probability;
  }
  EXPECT_EQ(d.ecdf.back().probability, 1.0);

  std::size_t total = 0;
  ASSERT_FALSE(d.histogram.empty());
  EXPECT_EQ(d.histogram.front().left, d.sorted_samples.front());
  EXPECT_EQ(d.histogram.back().right, d.sorted_samples.back());
  for (std::size_t b = 0; b < d.histogram.size(); ++b) {
    total += d.histogram[b].count;
    if (b > 0) EXPECT_EQ(d.histogram[b].left, d.histogram[b - 1].right);
  }
  EXPECT_EQ(total, d.n);
  EXPECT_GE(d.stddev, 0.0);
}

TEST(Summarize, SmallExample) {
  const EmpiricalDist d = summarize(Series({3, 1, 4, 2}));
  expect_dist_invariants(d);
  EXPECT_EQ(d.n, 4u);
  EXPECT_DOUBLE_EQ(d.mean, 2.5);
  EXPECT_DOUBLE_EQ(d.stddev, std::sqrt(1.25));  // population convention
  EXPECT_NEAR(d.skewness, 0.0, 1e-15);
  EXPECT_NEAR(d.excess_kurtosis, 1.64 - 3.0, 1e-14);
  const double want[] = {0.25, 0.5, 0.75, 1.0};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(d.ecdf[i].probability, want[i]);
    EXPECT_EQ(d.ecdf[i].value, i + 1.0);
  }
}

TEST(Summarize, ConstantSeries) {
  const EmpiricalDist d = summarize(Series({0.1, 0.1, 0.1}));
  expect_dist_invariants(d);
  EXPECT_EQ(d.stddev, 0.0);
  ASSERT_EQ(d.histogram.size(), 1u);
  EXPECT_EQ(d.histogram[0].count, 3u);
}

TEST(Summarize, ExplicitBinsAndErrors) {
  const EmpiricalDist d = summarize(Series({0, 1, 2, 3, 4, 5, 6, 7, 8, 10}), 5);
  expect_dist_invariants(d);
  ASSERT_EQ(d.histogram.size(), 5u);
  EXPECT_EQ(d.histogram[0].count, 2u);  // [0,2)
  EXPECT_EQ(d.histogram[4].count, 2u);  // [8,10]
  EXPECT_THROW(summarize(Series()), Error);
  EXPECT_THROW(summarize(Series({1, 2}), 0), Error);
}

TEST(Summarize, NormalSampleMoments) {
  const auto v = testing::sample_normal(100'000, 2024);
  const EmpiricalDist d = summarize(Series(v));
  expect_dist_invariants(d);
  EXPECT_NEAR(d.mean, 0.0, 0.02);
  EXPECT_NEAR(d.stddev, 1.0, 0.02);
  EXPECT_NEAR(d.skewness, 0.0, 0.05);
  EXPECT_NEAR(d.excess_kurtosis, 0.0, 0.1);
  EXPECT_GE(d.histogram.size(), 16u);
  EXPECT_LE(d.histogram.size(), 512u);
}

TEST(FreedmanDiaconis, ClampedRule) {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  // IQR = 499.5, width = 2 * 499.5 / 10 = 99.9, range 999 -> 10 -> clamped 16.
  EXPECT_EQ(freedman_diaconis_bins(v), 16u);
  auto heavy = testing::sample_cauchy(100'000, 5);
  std::sort(heavy.begin(), heavy.end());
  EXPECT_EQ(freedman_diaconis_bins(heavy), 512u);
  EXPECT_EQ(freedman_diaconis_bins({2.0, 2.0}), 1u);
  // Zero IQR with a nonzero range.
  EXPECT_EQ(freedman_diaconis_bins({0, 0, 0, 0, 0, 0, 0, 1}), 512u);
}

TEST(Quantile, LinearInterpolation) {
  const std::vector<double> v{1, 2, 3, 4};
  EXPECT_EQ(quantile_sorted(v, 0.0), 1.0);
  EXPECT_EQ(quantile_sorted(v, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.25), 1.75);
}

TEST(Normalize, Examples) {
  const Series n = normalize(Series({0, 2}));
  EXPECT_EQ(n[0], -1.0);
  EXPECT_EQ(n[1], 1.0);
  try {
    normalize(Series({3, 3, 3}));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.message(), "degenerate series");
  }
}

TEST(Normalize, ZeroMeanUnitStdAndIdempotent) {
  testing::OpenUniform u(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(500);
    const double shift = 1e3 * (u() - 0.5);
    const double spread = 1e-3 + 50.0 * u();
    for (auto& x : v) x = shift + spread * std::tan(3.0 * (u() - 0.5));
    const Series once = normalize(Series(v));
    const EmpiricalDist d = summarize(once);
    EXPECT_NEAR(d.mean, 0.0, 1e-12);
    EXPECT_NEAR(d.stddev, 1.0, 1e-12);
    const Series twice = normalize(once);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(twice[i], once[i], 1e-12);
  }
}

TEST(TailExcess, NormalCauchyAndEmpty) {
  const EmpiricalDist normal = summarize(Series(testing::sample_normal(200'000, 9)));
  const double r = tail_excess(normal, 3.0);
  EXPECT_GE(r, 0.5);
  EXPECT_LE(r, 1.5);

  // t(3): sigma = sqrt(3), P(|T| > 3 sigma) = 0.0138 against 0.0027 normal.
  const EmpiricalDist t3 =
      summarize(Series(testing::sample_t(200'000, 3.0, 0.0, 1.0, 10)));
  EXPECT_GT(tail_excess(t3, 3.0), 3.0);

  // A Cauchy sample inflates the sample std so much that few points clear
  // 3 std; the ratio is the plain count ratio, nothing more.
  const EmpiricalDist cauchy = summarize(Series(testing::sample_cauchy(200'000, 10)));
  std::size_t beyond = 0;
  for (double x : cauchy.sorted_samples) {
    beyond += std::abs(x - cauchy.mean) > 3.0 * cauchy.stddev ? 1 : 0;
  }
  EXPECT_NEAR(tail_excess(cauchy, 3.0),
              (beyond / 200'000.0) / 0.0026997960632601866, 1e-12);

  const EmpiricalDist small = summarize(Series({-1, 1, -1, 1}));
  EXPECT_EQ(tail_excess(small, 2.0), 0.0);

  EXPECT_THROW(tail_excess(small, 0.0), Error);
  EXPECT_THROW(tail_excess(summarize(Series({4, 4})), 3.0), Error);
}

}  // namespace
}  // namespace fattail
