#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace windlasso {

/// Input value outside the mathematical domain (NaN, infinity, negative scale).
struct InvalidValueError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input; carries the 1-based line number when known.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, long line = -1)
        : std::runtime_error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_number(line) {}
    long line_number;
};

/// Missing (station, timestamp) observations in an input panel.
struct GapError : std::runtime_error {
    explicit GapError(const std::string& msg, std::vector<std::string> missing = {})
        : std::runtime_error(msg), missing_cells(std::move(missing)) {}
    std::vector<std::string> missing_cells;
};

/// Simulation recursion is explosive; carries the estimated spectral radius.
struct StabilityError : std::runtime_error {
    explicit StabilityError(const std::string& msg, double radius)
        : std::runtime_error(msg), spectral_radius(radius) {}
    double spectral_radius;
};

/// Requested spline basis cannot be built (too few functions or too short a period).
struct BasisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Not enough observations for the requested lag structure.
struct LengthError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A response or residual column is identically zero / has no variation.
struct DegenerateDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coordinate descent hit the sweep cap; carries the last iterate.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, std::vector<double> iterate, double lambda)
        : std::runtime_error(msg), last_iterate(std::move(iterate)), lambda_value(lambda) {}
    std::vector<double> last_iterate;
    double lambda_value;
};

/// Singular normal equations in an OLS fit.
struct RankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Forecast origin or horizon outside the usable range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Requested more forecast origins than the holdout provides.
struct SamplingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Zero predictive spread with a non-matching realization.
struct DegenerateDistributionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Variance fit floored on most of the sample; weights would be meaningless.
struct IllConditioningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace windlasso
