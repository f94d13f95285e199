#include "ecfnorm/ecf.hpp"

#include <cmath>

#include "ecfnorm/errors.hpp"

namespace ecfnorm {

EcfValue ecf_at(std::span<const double> values, double t) {
    if (values.empty()) throw EmptyInput("ecf_at: empty sequence");
    double cs = 0.0;
    double sn = 0.0;
    for (double v : values) {
        cs += std::cos(t * v);
        sn += std::sin(t * v);
    }
    const double inv_n = 1.0 / static_cast<double>(values.size());
    return EcfValue{cs * inv_n, sn * inv_n, t};
}

double vn_statistic(const StudentizedSample& s, double t) {
    if (t == 0.0)
        throw InvalidPoint("vn_statistic: t = 0 is degenerate (c(0) = 0)");
    const EcfValue phi = ecf_at(s.z, t);
    const double mod2 = phi.modulus_squared();
    if (mod2 == 0.0)
        throw ZeroModulus("vn_statistic: |ecf| = 0, log undefined");
    return 0.5 * std::log(mod2) + 0.5 * t * t;
}

double asymptotic_coeff(double t) {
    const double x = t * t;  // cosh argument
    if (x <= 1.0) {
        // cosh(x) - 1 - x^2/2 = sum_{k>=2} x^(2k)/(2k)!, summed directly to
        // avoid the catastrophic cancellation of the closed form near 0.
        const double x2 = x * x;
        double term = x2 * x2 / 24.0;
        double sum = term;
        for (int k = 3; k <= 9; ++k) {
            term *= x2 / static_cast<double>((2 * k) * (2 * k - 1));
            sum += term;
        }
        return sum;
    }
    return std::cosh(x) - 1.0 - 0.5 * x * x;
}

}  // namespace ecfnorm
