#pragma once

#include <stdexcept>
#include <string>

namespace svtail {

/// A matrix argument contains NaN or infinite entries, or a computation
/// produced one (e.g. overflow in matrix_exp).
struct NonFiniteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An iterative solver hit its iteration cap before reaching tolerance.
struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyListError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// exp(theta * x) overflowed for a sampled x during an mgf estimate.
struct OverflowAtThetaError : std::runtime_error {
    explicit OverflowAtThetaError(double theta_value, const std::string& what)
        : std::runtime_error(what), theta(theta_value) {}
    double theta;
};

struct InvalidGridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownTagError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace svtail
