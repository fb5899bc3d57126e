#pragma once

#include <stdexcept>
#include <string>

namespace numrange {

// Shape or size mismatch in an input.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An input violates a documented precondition (non-unit vector, bad schedule, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A curve fails the strict-convexity requirement h + h'' > 0.
struct CurveInvalidError : std::invalid_argument {
    explicit CurveInvalidError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An iteration failed to converge or a continuation step collapsed.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A region that must contain another fails to, beyond tolerance.
struct ContainmentError : std::runtime_error {
    explicit ContainmentError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file or descriptor input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace numrange
