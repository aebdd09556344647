#pragma once

#include "spiked/model.hpp"

#include <string>
#include <vector>

namespace spiked {

/// One term coeff * lambda^lambda_power * log(lambda)^log_power.
struct ExpansionTerm {
    double coeff;
    double lambda_power;
    int log_power;
};

/// Small-coupling energy expansion with an explicit error-order marker.
/// Terms are sorted by ascending lambda_power, ties by descending log_power.
struct EnergyExpansion {
    std::vector<ExpansionTerm> terms;
    double error_lambda_power = 0.0;
    int error_log_power = 0;
    Regime regime = Regime::UNSUPPORTED;
};

/// Power-series (Rayleigh-Schrodinger) ground-state expansion, truncated at
/// the requested order (0, 1 or 2). Order 1 requires alpha < 2*gamma, order 2
/// requires alpha < gamma + 1. Accepts the non-singular range alpha <= 2 too.
EnergyExpansion rs_series(const OscillatorParams& p, int order);

/// Regime-dependent non-power ground-state expansion.
EnergyExpansion ground_expansion(const OscillatorParams& p);

/// Excited-state expansion; available only in regime S_IN_0_HALF.
EnergyExpansion excited_expansion(const OscillatorParams& p, int i);

double evaluate_expansion(const EnergyExpansion& e, double lambda);

std::string to_string(const EnergyExpansion& e);

/// int_0^inf t^{d-1} e^{-st} 1F1(a;b;kt) 1F1(a2;b2;k2t) dt via the nested
/// series-in-2F1 representation.
double laplace_1f1_product(double d, double s, double a, double b, double k, double a2, double b2,
                           double k2);

} // namespace spiked
