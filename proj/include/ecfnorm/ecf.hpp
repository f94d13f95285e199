#pragma once

#include <span>

#include "ecfnorm/sample.hpp"

namespace ecfnorm {

/// Value of the empirical characteristic function at a single point t.
struct EcfValue {
    double re = 0.0;
    double im = 0.0;
    double t = 0.0;

    [[nodiscard]] double modulus_squared() const { return re * re + im * im; }
};

/// Empirical characteristic function (1/n) sum exp(i t v_j).
///
/// Throws EmptyInput for an empty sequence.
[[nodiscard]] EcfValue ecf_at(std::span<const double> values, double t);

/// Log-modulus deviation of the studentized ecf from the standard normal
/// characteristic function:
///
///   v_n(t) = log(|ecf_S(t)| / exp(-t^2/2)) = 0.5*log(re^2 + im^2) + t^2/2.
///
/// Always <= t^2/2 (up to rounding). Throws InvalidPoint at t = 0 and
/// ZeroModulus if the ecf vanishes exactly.
[[nodiscard]] double vn_statistic(const StudentizedSample& s, double t);

/// Asymptotic variance coefficient c(t) = cosh(t^2) - 1 - t^4/2, so that
/// Var(v_n(t)) ~ c(t)/n under the null. Nonnegative, zero only at t = 0.
[[nodiscard]] double asymptotic_coeff(double t);

}  // namespace ecfnorm
