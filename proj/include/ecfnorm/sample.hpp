#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ecfnorm {

/// Divisor used by the sample variance estimate.
enum class Divisor { n, n_minus_1 };

/// An ordered collection of finite real observations.
class Sample {
public:
    /// Throws EmptyInput if `values` is empty, InvalidParameters if any
    /// value is NaN or infinite.
    explicit Sample(std::vector<double> values);

    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] std::size_t n() const { return values_.size(); }

private:
    std::vector<double> values_;
};

/// Observations centered and scaled by the sample mean and standard
/// deviation, together with the estimates that produced them.
struct StudentizedSample {
    std::vector<double> z;
    double mu_hat = 0.0;
    double sigma_hat = 0.0;
    Divisor divisor = Divisor::n_minus_1;
};

/// z_j = (x_j - mean) / sd, with sd^2 the variance under `divisor`.
///
/// Throws DegenerateSample when n < 2 or the sample is constant.
[[nodiscard]] StudentizedSample studentize(const Sample& sample,
                                           Divisor divisor = Divisor::n_minus_1);

}  // namespace ecfnorm
