#pragma once

namespace ecfnorm {

/// Standard normal CDF, computed via erfc for accuracy in both tails.
double normal_cdf(double x);

/// Standard normal survival function 1 - Phi(x).
double normal_sf(double x);

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal quantile function (inverse CDF).
///
/// Wichura's PPND16 rational approximation, accurate to ~1e-15 over
/// p in (0, 1). Returns -inf/+inf at p = 0/1 and NaN outside [0, 1].
double normal_quantile(double p);

/// Survival function of the chi-square distribution with 2 degrees of
/// freedom: exp(-x/2) for x >= 0.
double chi2_sf_2df(double x);

/// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
double regularized_incomplete_beta(double x, double a, double b);

/// CDF of the Student-t distribution with df degrees of freedom.
double student_t_cdf(double x, double df);

}  // namespace ecfnorm
