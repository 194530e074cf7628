#include "fattail/diff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "fattail/error.hpp"
#include "oracles.hpp"

namespace fattail {
namespace {

std::vector<double> values(const Series& s) { return {s.begin(), s.end()}; }

void expect_near_all(const Series& got, const std::vector<double>& want,
                     double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
  }
}

TEST(Series, RejectsNonFiniteAndBadStep) {
  EXPECT_THROW(Series({1.0, std::nan("")}), Error);
  EXPECT_THROW(Series({1.0, INFINITY}), Error);
  EXPECT_THROW(Series({1.0, 2.0}, 0.0), Error);
  EXPECT_THROW(Series({1.0, 2.0}, -1.0), Error);
  EXPECT_NO_THROW(Series({1.0, 2.0}, 0.5, "ok"));
}

TEST(DiffPlain, Examples) {
  EXPECT_EQ(values(diff_plain(Series({1, 3, 2, 2}))), (std::vector<double>{2, -1, 0}));
  EXPECT_EQ(values(diff_plain(Series({5, 5, 5}))), (std::vector<double>{0, 0}));
  EXPECT_EQ(values(diff_plain(Series({0, 1, 2, 3}))), (std::vector<double>{1, 1, 1}));
}

TEST(DiffPlain, PropagatesMetadata) {
  const Series out = diff_plain(Series({1, 2, 4}, 0.25, "x"));
  ASSERT_TRUE(out.dt().has_value());
  EXPECT_EQ(*out.dt(), 0.25);
  EXPECT_NE(out.label(), "x");
  EXPECT_NE(out.label().find('x'), std::string::npos);
}

TEST(DiffPlain, TooShort) {
  try {
    diff_plain(Series({1.0}));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.module(), Module::diffcore);
    EXPECT_EQ(e.message(), "series too short");
  }
  EXPECT_THROW(diff_plain(Series()), Error);
}

TEST(DiffRatio, HandEvaluated) {
  // (4-2)/3, (6-4)/5, (8-6)/7
  expect_near_all(diff_ratio(Series({2, 4, 6, 8}), 2),
                  {2.0 / 3.0, 2.0 / 5.0, 2.0 / 7.0}, 1e-15);
}

TEST(DiffRatio, TrailingWindowAndLength) {
  // k = 3: first index 2, window s[0..2].
  const Series out = diff_ratio(Series({1, 2, 3, 5, 8}), 3);
  expect_near_all(out, {(3.0 - 2.0) / 2.0, (5.0 - 3.0) / (10.0 / 3.0),
                        (8.0 - 5.0) / (16.0 / 3.0)},
                  1e-15);
  // k = 1 divides by the current sample.
  expect_near_all(diff_ratio(Series({2, 4, 1}), 1), {0.5, -3.0}, 1e-15);
  for (int k = 1; k <= 6; ++k) {
    const std::size_t n = 10;
    const Series s(std::vector<double>(n, 3.0));
    EXPECT_EQ(diff_ratio(s, k).size(), n - std::max<std::size_t>(1, k - 1));
  }
}

TEST(DiffRatio, ConstantSeriesIsZero) {
  for (int k = 1; k <= 3; ++k) {
    for (double x : diff_ratio(Series({-4.5, -4.5, -4.5}), k)) EXPECT_EQ(x, 0.0);
  }
}

TEST(DiffRatio, DegenerateWindowMean) {
  try {
    diff_ratio(Series({1, -1}), 2);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_NE(e.message().find("degenerate window mean"), std::string::npos);
    EXPECT_NE(e.message().find("index 1"), std::string::npos);
  }
}

TEST(DiffRatio, Preconditions) {
  EXPECT_THROW(diff_ratio(Series({1, 2, 3}), 0), Error);
  EXPECT_THROW(diff_ratio(Series({1, 2, 3}), 4), Error);
  EXPECT_THROW(diff_ratio(Series({1}), 1), Error);
}

TEST(DiffLog, Examples) {
  const double e = std::numbers::e;
  expect_near_all(diff_log(Series({1, e, e * e})), {1.0, 1.0}, 1e-15);
  expect_near_all(diff_log(Series({7, 7, 7})), {0.0, 0.0}, 0.0);
  // ln(0.5), 30-digit mpmath reference.
  expect_near_all(diff_log(Series({1, 0.5})), {-0.693147180559945309417232121458},
                  1e-15);
}

TEST(DiffLog, RejectsNonPositiveWithIndex) {
  try {
    diff_log(Series({3, 2, 0, 5}));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_NE(e.message().find("positive"), std::string::npos);
    EXPECT_NE(e.message().find("index 2"), std::string::npos);
  }
  EXPECT_THROW(diff_log(Series({1, -1})), Error);
}

TEST(DiffN, Examples) {
  EXPECT_EQ(values(diff_n(Series({1, 3, 2, 2}), {DiffMethod::plain, 2, 5})),
            (std::vector<double>{-3, 1}));
  EXPECT_EQ(values(diff_n(Series({0, 1, 4, 9, 16}), {DiffMethod::plain, 3, 5})),
            (std::vector<double>{0, 0}));
  const Series s({0.3, -1.2, 8.8, 2.5, 2.5, 1.0});
  EXPECT_EQ(values(diff_n(s, {DiffMethod::plain, 1, 5})), values(diff_plain(s)));
}

TEST(DiffN, HigherOrderTransformsThenDifferences) {
  const Series s({2, 4, 6, 8, 11});
  EXPECT_EQ(values(diff_n(s, {DiffMethod::ratio, 2, 2})),
            values(diff_plain(diff_ratio(s, 2))));
  EXPECT_EQ(values(diff_n(s, {DiffMethod::log, 3, 5})),
            values(diff_plain(diff_plain(diff_log(s)))));
}

TEST(DiffN, ExhaustionAndBadSpec) {
  EXPECT_THROW(diff_n(Series({1, 2, 3}), {DiffMethod::plain, 3, 5}), Error);
  EXPECT_THROW(diff_n(Series({1, 2, 3}), {DiffMethod::plain, 0, 5}), Error);
  EXPECT_THROW(diff_n(Series({1, 2, 3}), {DiffMethod::ratio, 1, 0}), Error);
}

// Properties over pseudo-random inputs.

std::vector<double> random_values(testing::OpenUniform& u, std::size_t n,
                                  double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = lo + (hi - lo) * u();
  return v;
}

TEST(DiffProperties, PlainLengthAndOrder) {
  testing::OpenUniform u(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 5 + static_cast<std::size_t>(u() * 40);
    const int order = 1 + static_cast<int>(u() * 4);
    const Series s(random_values(u, n, -100, 100));
    EXPECT_EQ(diff_plain(s).size(), n - 1);
    EXPECT_EQ(diff_n(s, {DiffMethod::plain, order, 5}).size(), n - order);
  }
}

TEST(DiffProperties, PolynomialAnnihilation) {
  // Rounding of the samples themselves is amplified by the binomial weights
  // of the k-th difference (sum 2^k), so the bound on sample magnitude
  // shrinks with the order: 1e6 up to cubics, 1e4 beyond.
  testing::OpenUniform u(12);
  for (int degree = 0; degree <= 4; ++degree) {
    const double magnitude = degree <= 2 ? 1e6 : 1e4;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> coeff(degree + 1);
      for (auto& c : coeff) c = 2.0 * u() - 1.0;
      std::vector<double> v;
      for (int i = 0; i < 30; ++i) {
        double p = 0.0;
        for (int d = degree; d >= 0; --d) p = p * i + coeff[d];
        v.push_back(p);
      }
      const double peak = std::abs(*std::max_element(
          v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }));
      for (auto& x : v) x *= magnitude / peak;
      const Series out = diff_n(Series(v), {DiffMethod::plain, degree + 1, 5});
      for (double x : out) EXPECT_LE(std::abs(x), 1e-9) << "degree " << degree;
    }
  }
}

TEST(DiffProperties, RatioAndLogScaleInvariant) {
  testing::OpenUniform u(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto v = random_values(u, 40, 0.5, 50.0);
    const double c = 1e-3 + 1e4 * u();
    std::vector<double> scaled(v);
    for (auto& x : scaled) x *= c;
    const int k = 1 + static_cast<int>(u() * 6);
    const Series a = diff_ratio(Series(v), k);
    const Series b = diff_ratio(Series(scaled), k);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_LE(std::abs(a[i] - b[i]), 1e-12 * std::max(1.0, std::abs(a[i])));
    }
    const Series la = diff_log(Series(v));
    const Series lb = diff_log(Series(scaled));
    for (std::size_t i = 0; i < la.size(); ++i) EXPECT_NEAR(la[i], lb[i], 1e-12);
  }
}

TEST(DiffProperties, SumTelescopes) {
  testing::OpenUniform u(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto v = random_values(u, 200, -1e3, 1e3);
    const Series d = diff_plain(Series(v));
    double sum = 0.0;
    for (double x : d) sum += x;
    const double expect = v.back() - v.front();
    EXPECT_LE(std::abs(sum - expect), 1e-9 * std::max(1.0, std::abs(expect)));
  }
}

}  // namespace
}  // namespace fattail
