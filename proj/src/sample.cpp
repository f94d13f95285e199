#include "ecfnorm/sample.hpp"

#include <cmath>
#include <utility>

#include "ecfnorm/errors.hpp"

namespace ecfnorm {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw EmptyInput("Sample: no observations");
    for (double v : values_) {
        if (!std::isfinite(v))
            throw InvalidParameters("Sample: non-finite observation");
    }
}

StudentizedSample studentize(const Sample& sample, Divisor divisor) {
    const auto x = sample.values();
    const std::size_t n = x.size();
    if (n < 2) throw DegenerateSample("studentize: need at least 2 observations");

    double sum = 0.0;
    for (double v : x) sum += v;
    const double mu = sum / static_cast<double>(n);

    double ss = 0.0;
    for (double v : x) {
        const double d = v - mu;
        ss += d * d;
    }
    const double den = (divisor == Divisor::n) ? static_cast<double>(n)
                                               : static_cast<double>(n - 1);
    const double var = ss / den;
    if (var <= 0.0)
        throw DegenerateSample("studentize: zero sample variance");

    StudentizedSample out;
    out.mu_hat = mu;
    out.sigma_hat = std::sqrt(var);
    out.divisor = divisor;
    out.z.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.z[j] = (x[j] - mu) / out.sigma_hat;
    return out;
}

}  // namespace ecfnorm
