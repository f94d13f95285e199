#include "ecfnorm/distributions.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "ecfnorm/errors.hpp"
#include "ecfnorm/special.hpp"

namespace ecfnorm {

void validate(const DistributionSpec& spec) {
    std::visit(
        [](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Normal>) {
                if (!(d.sigma > 0.0) || !std::isfinite(d.mu))
                    throw InvalidParameters("normal: requires finite mu and sigma > 0");
            } else if constexpr (std::is_same_v<T, StudentT>) {
                if (d.df < 1) throw InvalidParameters("t: requires df >= 1");
            } else if constexpr (std::is_same_v<T, Laplace>) {
                if (!(d.b > 0.0) || !std::isfinite(d.mu))
                    throw InvalidParameters("laplace: requires finite mu and b > 0");
            } else if constexpr (std::is_same_v<T, Logistic>) {
                if (!(d.s > 0.0) || !std::isfinite(d.mu))
                    throw InvalidParameters("logistic: requires finite mu and s > 0");
            } else if constexpr (std::is_same_v<T, NormalMixture>) {
                if (!(d.alpha >= 0.0 && d.alpha <= 1.0) || !(d.sigma2nd > 0.0))
                    throw InvalidParameters("mix: requires alpha in [0,1] and sigma > 0");
            }
        },
        spec);
}

namespace {

// Splits "name:p1:p2" into fields, tracking character offsets for errors.
struct SpecCursor {
    std::string_view text;
    std::size_t pos = 0;

    std::string_view next_field() {
        const std::size_t start = pos;
        const std::size_t colon = text.find(':', start);
        if (colon == std::string_view::npos) {
            pos = text.size();
            return text.substr(start);
        }
        pos = colon + 1;
        return text.substr(start, colon - start);
    }

    [[nodiscard]] bool done() const { return pos >= text.size(); }
};

double parse_number(std::string_view field, std::size_t at) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw ParseError("expected a number, got '" + std::string(field) + "'", at);
    return value;
}

int parse_int(std::string_view field, std::size_t at) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("expected an integer, got '" + std::string(field) + "'", at);
    return value;
}

}  // namespace

DistributionSpec parse_spec(std::string_view text) {
    if (text.empty()) throw ParseError("empty distribution spec", 0);
    SpecCursor cur{text};
    const std::string_view name = cur.next_field();

    DistributionSpec spec;
    if (name == "normal") {
        Normal d;
        if (!cur.done()) {
            const std::size_t at = cur.pos;
            d.mu = parse_number(cur.next_field(), at);
            if (cur.done())
                throw ParseError("normal:mu:sigma requires both parameters", text.size());
            const std::size_t at2 = cur.pos;
            d.sigma = parse_number(cur.next_field(), at2);
        }
        spec = d;
    } else if (name == "uniform") {
        spec = Uniform01{};
    } else if (name == "t") {
        if (cur.done()) throw ParseError("t:df requires degrees of freedom", text.size());
        const std::size_t at = cur.pos;
        spec = StudentT{parse_int(cur.next_field(), at)};
    } else if (name == "laplace") {
        spec = Laplace{};
    } else if (name == "logistic") {
        spec = Logistic{};
    } else if (name == "mix") {
        if (cur.done())
            throw ParseError("mix:sigma:alpha requires both parameters", text.size());
        const std::size_t at = cur.pos;
        const double sigma = parse_number(cur.next_field(), at);
        if (cur.done())
            throw ParseError("mix:sigma:alpha is missing alpha", text.size());
        const std::size_t at2 = cur.pos;
        const double alpha = parse_number(cur.next_field(), at2);
        spec = NormalMixture{alpha, sigma};
    } else {
        throw ParseError("unknown distribution '" + std::string(name) +
                             "' (expected normal|uniform|t|laplace|logistic|mix)",
                         0);
    }
    if (!cur.done())
        throw ParseError("trailing characters in distribution spec", cur.pos);
    validate(spec);
    return spec;
}

namespace {

std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

std::string to_string(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Normal>) {
                if (d.mu == 0.0 && d.sigma == 1.0) return "normal";
                return "normal:" + fmt_param(d.mu) + ":" + fmt_param(d.sigma);
            } else if constexpr (std::is_same_v<T, Uniform01>) {
                return "uniform";
            } else if constexpr (std::is_same_v<T, StudentT>) {
                return "t:" + std::to_string(d.df);
            } else if constexpr (std::is_same_v<T, Laplace>) {
                return "laplace";
            } else if constexpr (std::is_same_v<T, Logistic>) {
                return "logistic";
            } else {
                return "mix:" + fmt_param(d.sigma2nd) + ":" + fmt_param(d.alpha);
            }
        },
        spec);
}

bool is_normal(const DistributionSpec& spec) {
    return std::holds_alternative<Normal>(spec);
}

double draw_standard_normal(RngStream& stream) {
    return normal_quantile(stream.next_double());
}

namespace {

double draw_one(const DistributionSpec& spec, RngStream& stream) {
    return std::visit(
        [&stream](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Normal>) {
                return d.mu + d.sigma * draw_standard_normal(stream);
            } else if constexpr (std::is_same_v<T, Uniform01>) {
                return stream.next_double();
            } else if constexpr (std::is_same_v<T, StudentT>) {
                // Ratio construction: N(0,1) / sqrt(chi2_df / df), with the
                // chi-square built from df squared normals.
                const double z = draw_standard_normal(stream);
                double chi2 = 0.0;
                for (int k = 0; k < d.df; ++k) {
                    const double w = draw_standard_normal(stream);
                    chi2 += w * w;
                }
                return z / std::sqrt(chi2 / static_cast<double>(d.df));
            } else if constexpr (std::is_same_v<T, Laplace>) {
                const double u = stream.next_double();
                return (u < 0.5) ? d.mu + d.b * std::log(2.0 * u)
                                 : d.mu - d.b * std::log(2.0 * (1.0 - u));
            } else if constexpr (std::is_same_v<T, Logistic>) {
                const double u = stream.next_double();
                return d.mu + d.s * std::log(u / (1.0 - u));
            } else {
                const double u = stream.next_double();
                const double z = draw_standard_normal(stream);
                return (u < d.alpha) ? z : d.sigma2nd * z;
            }
        },
        spec);
}

}  // namespace

Sample draw_sample(const DistributionSpec& spec, std::size_t n, RngStream stream) {
    if (n < 1) throw InvalidParameters("draw_sample: n must be >= 1");
    validate(spec);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = draw_one(spec, stream);
    return Sample(std::move(values));
}

double dist_cdf(const DistributionSpec& spec, double x) {
    return std::visit(
        [x](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Normal>) {
                return normal_cdf((x - d.mu) / d.sigma);
            } else if constexpr (std::is_same_v<T, Uniform01>) {
                if (x <= 0.0) return 0.0;
                if (x >= 1.0) return 1.0;
                return x;
            } else if constexpr (std::is_same_v<T, StudentT>) {
                return student_t_cdf(x, static_cast<double>(d.df));
            } else if constexpr (std::is_same_v<T, Laplace>) {
                const double u = (x - d.mu) / d.b;
                return (u < 0.0) ? 0.5 * std::exp(u) : 1.0 - 0.5 * std::exp(-u);
            } else if constexpr (std::is_same_v<T, Logistic>) {
                return 1.0 / (1.0 + std::exp(-(x - d.mu) / d.s));
            } else {
                return d.alpha * normal_cdf(x) + (1.0 - d.alpha) * normal_cdf(x / d.sigma2nd);
            }
        },
        spec);
}

}  // namespace ecfnorm
