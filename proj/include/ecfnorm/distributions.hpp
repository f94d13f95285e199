#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "ecfnorm/rng.hpp"
#include "ecfnorm/sample.hpp"

namespace ecfnorm {

struct Normal {
    double mu = 0.0;
    double sigma = 1.0;
};

struct Uniform01 {};

struct StudentT {
    int df = 1;
};

struct Laplace {
    double mu = 0.0;
    double b = 1.0;
};

struct Logistic {
    double mu = 0.0;
    double s = 1.0;
};

/// alpha N(0,1) + (1-alpha) N(0, sigma2nd^2), the contaminated normal.
struct NormalMixture {
    double alpha = 0.5;
    double sigma2nd = 1.0;
};

using DistributionSpec =
    std::variant<Normal, Uniform01, StudentT, Laplace, Logistic, NormalMixture>;

/// Throws InvalidParameters if parameter constraints are violated
/// (sigma > 0, df >= 1, b > 0, s > 0, alpha in [0,1]).
void validate(const DistributionSpec& spec);

/// Parses the CLI grammar:
///
///   normal[:mu:sigma] | uniform | t:df | laplace | logistic | mix:sigma:alpha
///
/// Throws ParseError with character position on malformed input.
[[nodiscard]] DistributionSpec parse_spec(std::string_view text);

/// Canonical spec string, inverse of parse_spec.
[[nodiscard]] std::string to_string(const DistributionSpec& spec);

[[nodiscard]] bool is_normal(const DistributionSpec& spec);

/// n independent draws; deterministic given (spec, n, stream).
[[nodiscard]] Sample draw_sample(const DistributionSpec& spec, std::size_t n,
                                 RngStream stream);

/// CDF of the sampled distribution (used by distributional checks).
[[nodiscard]] double dist_cdf(const DistributionSpec& spec, double x);

/// Single standard normal variate by inversion of the uniform deviate.
[[nodiscard]] double draw_standard_normal(RngStream& stream);

}  // namespace ecfnorm
