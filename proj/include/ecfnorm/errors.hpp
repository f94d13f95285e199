#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecfnorm {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sample is constant (or too small) so location/scale cannot be estimated.
struct DegenerateSample : Error {
    using Error::Error;
};

/// An operation received an empty sequence.
struct EmptyInput : Error {
    using Error::Error;
};

/// Evaluation point at which the statistic is degenerate (t = 0).
struct InvalidPoint : Error {
    using Error::Error;
};

/// |ecf| is exactly zero, so its logarithm is undefined.
struct ZeroModulus : Error {
    using Error::Error;
};

struct TooSmall : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

/// Requested significance level has no critical value in the table.
struct UnsupportedAlpha : Error {
    using Error::Error;
};

struct InvalidParameters : Error {
    using Error::Error;
};

/// Malformed text input. `position` is a character offset for spec strings
/// and a 1-based line number for data files.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace ecfnorm
