#include "fattail/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fattail/error.hpp"

namespace fattail {
namespace {

constexpr int kMaxContinuedFractionTerms = 100'000;
constexpr double kTiny = 1e-300;

void check_t_params(double nu, double scale) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw Error(Module::stats, "degrees of freedom must be positive");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(Module::stats, "scale must be positive");
  }
}

// Continued fraction for I_x(a, b), valid (fast) for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxContinuedFractionTerms; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 4.0 * std::numeric_limits<double>::epsilon()) {
      return h;
    }
  }
  throw Error(Module::stats, "incomplete beta continued fraction did not converge");
}

}  // namespace

double normal_pdf(double x) noexcept {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double x) noexcept {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double incomplete_beta(double a, double b, double x, double y) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(Module::stats, "incomplete beta requires a, b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(Module::stats, "incomplete beta requires x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (y == 0.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, y) / b;
}

double incomplete_beta(double a, double b, double x) {
  return incomplete_beta(a, b, x, 1.0 - x);
}

double t_log_pdf(double x, double nu, double loc, double scale) {
  check_t_params(nu, scale);
  const double z = (x - loc) / scale;
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
         0.5 * std::log(nu * std::numbers::pi) - std::log(scale) -
         0.5 * (nu + 1.0) * std::log1p(z * z / nu);
}

double t_pdf(double x, double nu, double loc, double scale) {
  return std::exp(t_log_pdf(x, nu, loc, scale));
}

double t_cdf(double x, double nu, double loc, double scale) {
  check_t_params(nu, scale);
  const double z = (x - loc) / scale;
  if (z == 0.0) return 0.5;
  const double z2 = z * z;
  // Lower tail mass P(T < -|z|) = I_{nu/(nu+z^2)}(nu/2, 1/2) / 2; both
  // arguments of the incomplete beta are formed directly to avoid 1 - x.
  double tail;
  if (std::isinf(z2)) {
    tail = 0.0;
  } else {
    const double denom = nu + z2;
    tail = 0.5 * incomplete_beta(0.5 * nu, 0.5, nu / denom, z2 / denom);
  }
  return z < 0.0 ? tail : 1.0 - tail;
}

}  // namespace fattail
