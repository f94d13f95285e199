#pragma once

#include <cstddef>

#include "ecfnorm/sample.hpp"

namespace ecfnorm {

/// Outcome of the single-point ecf normality test.
struct EcftResult {
    double v_n = 0.0;          ///< log-modulus deviation at t
    double t = 0.0;            ///< evaluation point
    double standardized = 0.0; ///< v_n / sqrt(c(t)/n), asymptotically N(0,1)
    double p_value = 0.0;      ///< two-sided normal p-value
    bool reject = false;
    double alpha = 0.0;
    std::size_t n = 0;
};

/// Single-point ecf test of normality.
///
/// Studentizes the sample, evaluates v_n(t), standardizes by the asymptotic
/// variance c(t)/n, and rejects when |standardized| exceeds the two-sided
/// normal critical value (equivalently p_value < alpha).
[[nodiscard]] EcftResult ecft_test(const Sample& sample, double t = 1.0,
                                   double alpha = 0.05,
                                   Divisor divisor = Divisor::n_minus_1);

}  // namespace ecfnorm
