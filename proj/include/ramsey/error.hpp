#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Base of every error raised by the library. The CLI maps each subclass to
/// a stable exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed sizes, out-of-range colors, unknown ids, missing parameters.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A formula's precondition does not hold for the supplied parameters.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// Input text (JSON, DIMACS, target tokens) could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Exhaustive work would exceed the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A coloring that must avoid its targets does not.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

} // namespace ramsey
