#pragma once

#include "spiked/model.hpp"

namespace spiked {

/// Moments of the normalized trial state W_alpha * psi_i.
struct TrialMoments {
    double norm_sq;     // N^2 with N * ||W psi_i|| = 1; tends to 1 as lambda -> 0
    double eta;         // expectation of H in the normalized trial state
    double residual_sq; // ||(H - E_i^0) phi||^2 for the normalized trial state
    double quad_error;  // propagated quadrature error bound
};

/// Bessel cutoff factor W_alpha(x; lambda): 0 at the origin, 1 at infinity.
double w_alpha(double x, const OscillatorParams& p);

/// dW_alpha/dx; strictly positive on (0, inf).
double dw_alpha(double x, const OscillatorParams& p);

/// Quadrature moments feeding the eigenvalue bounds; tol is the relative
/// integration target.
TrialMoments trial_state_moments(const OscillatorParams& p, int i, double tol = 1e-10);

} // namespace spiked
