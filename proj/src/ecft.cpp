#include "ecfnorm/ecft.hpp"

#include <cmath>

#include "ecfnorm/ecf.hpp"
#include "ecfnorm/errors.hpp"
#include "ecfnorm/special.hpp"

namespace ecfnorm {

EcftResult ecft_test(const Sample& sample, double t, double alpha, Divisor divisor) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidParameters("ecft_test: alpha must be in (0, 1)");
    if (t == 0.0)
        throw InvalidPoint("ecft_test: t = 0 is degenerate");

    const StudentizedSample s = studentize(sample, divisor);
    const double vn = vn_statistic(s, t);
    const double n = static_cast<double>(sample.n());
    const double standardized = vn / std::sqrt(asymptotic_coeff(t) / n);
    const double p = 2.0 * normal_sf(std::fabs(standardized));

    EcftResult r;
    r.v_n = vn;
    r.t = t;
    r.standardized = standardized;
    r.p_value = p;
    r.alpha = alpha;
    r.reject = p < alpha;
    r.n = sample.n();
    return r;
}

}  // namespace ecfnorm
