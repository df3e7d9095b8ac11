#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands or file contents disagree on matrix/vector dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Invalid argument values (empty input sets, bad k, malformed window, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Matrix is numerically singular; the message names the offending eigenvalue magnitude.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// An operation that requires positive definite input received something else.
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// An iterative kernel failed to reach its convergence threshold.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Input file could not be parsed or violates the documented schema.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace loewner
