#pragma once

#include <string>

namespace spiked {

/// Hamiltonian parameters for -d^2/dx^2 + x^2 + A/x^2 + lambda/x^alpha
/// on (0, inf) with a Dirichlet condition at the origin.
struct OscillatorParams {
    double A = 0.0;      // coupling of the 1/x^2 term, A >= 0
    double alpha = 0.0;  // singularity exponent, alpha > 2
    double lambda = 0.0; // perturbation coupling, lambda >= 0

    void validate() const; // throws std::domain_error on violation
};

/// Quantities derived from (A, alpha).
struct DerivedParams {
    double gamma; // 1 + sqrt(1 + 4A)/2, >= 3/2
    double nu;    // 1/(alpha - 2)
    double s;     // regime index 2*nu*(gamma - 1)
};

/// Expansion regimes keyed by s = 2*nu*(gamma-1). RS_FULL labels parameters
/// where the printed second-order power series is fully valid (alpha < gamma+1);
/// the classifier itself always returns one of the interval/boundary tags.
enum class Regime {
    RS_FULL,
    S_IN_0_HALF, // 0 < s <= 1/2
    S_IN_HALF_1, // 1/2 < s < 1
    S_EQ_1,      // s = 1, i.e. alpha = 2*gamma
    S_IN_1_2,    // 1 < s < 2
    S_EQ_2,      // s = 2, i.e. alpha = gamma + 1
    S_IN_2_3,    // 2 < s < 3
    S_IN_3_4,    // 3 < s < 4
    UNSUPPORTED, // s = 3 exactly, or s >= 4
};

const char* to_string(Regime r);

DerivedParams derive_params(const OscillatorParams& p);

/// Boundary tags win when |s - boundary| < tol; tol must lie in (0, 1e-6].
Regime classify_regime(const DerivedParams& d, double tol = 1e-9);

/// Unperturbed spectrum E_n = 4n + 2*gamma.
double gk_energy(int n, double gamma);

/// Unperturbed eigenfunction psi_n(x), normalized on (0, inf).
double gk_wavefunction(int n, double gamma, double x);

struct GKState {
    int index;
    double energy;
};

GKState gk_state(int n, double gamma);

} // namespace spiked
