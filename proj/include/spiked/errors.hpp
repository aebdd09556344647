#pragma once

#include <stdexcept>
#include <string>

namespace spiked {

// Numerical failures (divergent series, exhausted budgets, overflow).
// Parameter/domain violations use std::domain_error / std::invalid_argument.
class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Thrown when an adaptive integration cannot reach its tolerance within the
// evaluation budget; carries the best partial estimate.
class quadrature_error : public numerical_error {
  public:
    quadrature_error(const std::string& msg, double partial, double err_est, long evals)
        : numerical_error(msg), partial_value(partial), error_estimate(err_est),
          evaluations(evals) {}

    double partial_value;
    double error_estimate;
    long evaluations;
};

} // namespace spiked
