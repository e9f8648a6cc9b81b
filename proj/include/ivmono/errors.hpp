#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivmono {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interval construction rejected (lo > hi, NaN endpoint).
struct ConstructionError : Error {
    using Error::Error;
};

// Argument outside the operation's domain (negative range fed to the
// product, point outside the unit box, arity mismatch).
struct DomainError : Error {
    using Error::Error;
};

// An expression evaluated to an interval outside [0,1].
struct RangeError : Error {
    using Error::Error;
};

// DSL parse failure; carries source position and what was expected.
struct SyntaxError : Error {
    int line;
    int column;
    std::vector<std::string> expected;

    SyntaxError(const std::string& msg, int line_, int column_,
                std::vector<std::string> expected_ = {})
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
          line(line_), column(column_), expected(std::move(expected_)) {}
};

// Reference to a variable beyond the declared arity, or an argument-count
// mismatch against a fixed-arity function.
struct ArityError : Error {
    using Error::Error;
};

struct UnknownBuiltinError : Error {
    using Error::Error;
};

// Bad parameters to a builtin or a sampling configuration (weights not
// summing to 1, grid step not dividing 1, ...).
struct BadParamsError : Error {
    using Error::Error;
};

}  // namespace ivmono
