#ifndef MINCUT_ERRORS_HPP_
#define MINCUT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mincut {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Strict graph construction rejected a duplicate edge or self-loop.
class StrictViolation : public Error {
public:
    using Error::Error;
};

/// A graph with zero vertices was requested.
class EmptyGraph : public Error {
public:
    using Error::Error;
};

/// Two vertex sets that must be disjoint overlap.
class OverlappingSets : public Error {
public:
    using Error::Error;
};

/// Sets of a contraction family overlap.
class OverlappingFamily : public Error {
public:
    using Error::Error;
};

/// Input text could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input text does not look like the requested format.
class FormatMismatch : public Error {
public:
    using Error::Error;
};

/// Conductance parameter is negative or not finite.
class InvalidPhi : public Error {
public:
    using Error::Error;
};

/// Part is too large for exhaustive certification.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// Eigenvector iteration did not reach the residual target.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Operation requires at least two vertices.
class GraphTooSmall : public Error {
public:
    using Error::Error;
};

/// Graph is too large for the exhaustive cut oracle.
class ExhaustiveTooLarge : public Error {
public:
    using Error::Error;
};

/// A self-check of an internal invariant failed.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace mincut

#endif  // MINCUT_ERRORS_HPP_
