#pragma once

#include <stdexcept>
#include <string>

namespace rankforge {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (bad record syntax, non-contiguous indices, bad JSON).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
    /// 1-based line of the offending record, 0 if not applicable.
    int line() const { return line_; }

private:
    int line_;
};

/// A node index outside [1, n].
class RangeError : public Error {
public:
    using Error::Error;
};

/// Vector/graph size mismatch between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Problem too large for a dense representation.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Power iteration did not reach the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual, int iterations)
        : Error(msg), residual_(residual), iterations_(iterations) {}
    double residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    double residual_;
    int iterations_;
};

/// Eigensolver failure; index() is the 1-based eigenvalue that did not converge.
class NumericalError : public Error {
public:
    NumericalError(const std::string& msg, int index) : Error(msg), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

/// Too few support points for a fit.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Non-finite entry where a probability was required.
class InvalidProbabilityError : public Error {
public:
    using Error::Error;
};

/// A rank vector that is not a permutation of 1..n.
class InvalidRankError : public Error {
public:
    using Error::Error;
};

/// Scenario edits that violate the scenario invariants.
class ScenarioError : public Error {
public:
    using Error::Error;
};

/// Lookup of a label that does not exist.
class NotFoundError : public Error {
public:
    using Error::Error;
};

} // namespace rankforge
