#pragma once

#include <functional>

namespace spiked {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b].
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol = 1e-12, long budget = 1000000);

/// Adaptive integration of f over (0, inf). Logarithmic substitution handles
/// integrable endpoint behavior on (0, split]; the upper range is extended in
/// geometric blocks until the (Gaussian-type) tail is negligible against tol.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f, double split = 1.0,
                                   double tol = 1e-10, long budget = 4000000);

} // namespace spiked
