#pragma once

#include "spiked/model.hpp"

#include <optional>

namespace spiked {

struct SolverConfig {
    double x_min = 0.0;
    double x_max = 0.0;
    int n_points = 0;
    int refinement_levels = 3;

    void validate() const;
};

/// Domain and resolution tuned to the parameters: the inner cutoff sits where
/// the barrier suppresses the wavefunction far below the target accuracy, the
/// outer cutoff far beyond the classical turning point.
SolverConfig auto_config(const OscillatorParams& p, int state);

struct EnergyEstimate {
    double value = 0.0;
    double error_estimate = 0.0;
    SolverConfig config_used;
};

/// state-th Dirichlet eigenvalue of -d^2/dx^2 + x^2 + A/x^2 + lambda/x^alpha
/// on [x_min, x_max], three-point central differences on a logarithmic mesh,
/// Sturm bisection, Richardson extrapolation across refinement levels.
EnergyEstimate solve_reference(const OscillatorParams& p, int state, const SolverConfig& cfg);
EnergyEstimate solve_reference(const OscillatorParams& p, int state);

struct KTInterval {
    double lower = 0.0;
    double upper = 0.0;
    bool valid = false;
};

/// Two-sided eigenvalue bounds from a trial expectation eta and residual norm
/// squared, given a lower estimate of the next eigenvalue (and, beyond the
/// ground state, an upper estimate of the previous one).
KTInterval kato_temple(double eta, double residual_sq, std::optional<double> next_lower,
                       std::optional<double> prev_upper = std::nullopt);

} // namespace spiked
