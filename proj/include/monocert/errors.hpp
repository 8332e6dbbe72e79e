#pragma once

#include <stdexcept>
#include <string>

namespace mono {

// Caller passed arguments outside a routine's documented domain.
struct BadParameters : std::invalid_argument {
    explicit BadParameters(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// A structural expectation that should hold by theory failed at runtime.
// Reaching this means a bug (or a genuinely new phenomenon), never bad input.
struct InternalInvariantViolation : std::logic_error {
    explicit InternalInvariantViolation(const std::string& what) : std::logic_error(what) {}
};

struct DegenerateForm : std::domain_error {
    explicit DegenerateForm(const std::string& what) : std::domain_error(what) {}
};

struct EmptySolution : std::domain_error {
    explicit EmptySolution(const std::string& what) : std::domain_error(what) {}
};

// The restricted braid representation did not produce the expected
// one-dimensional radical / one-dimensional form space.
struct RadicalDimensionUnexpected : std::logic_error {
    explicit RadicalDimensionUnexpected(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mono
