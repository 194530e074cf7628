#pragma once

namespace fattail {

/// Standard normal density.
double normal_pdf(double x) noexcept;

/// Standard normal CDF, computed from erfc (absolute error well below 1e-12).
double normal_cdf(double x) noexcept;

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
/// `y` must equal 1 - x; passing it separately keeps precision when x is
/// close to 1. Continued fraction with modified Lentz evaluation.
double incomplete_beta(double a, double b, double x, double y);
double incomplete_beta(double a, double b, double x);

/// Location-scale Student t. All throw Error(Module::stats) when
/// nu <= 0 or scale <= 0.
double t_pdf(double x, double nu, double loc = 0.0, double scale = 1.0);
double t_log_pdf(double x, double nu, double loc = 0.0, double scale = 1.0);
double t_cdf(double x, double nu, double loc = 0.0, double scale = 1.0);

}  // namespace fattail
