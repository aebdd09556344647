#include "spiked/model.hpp"

#include "spiked/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spiked {

namespace {

[[noreturn]] void fail(const char* fmt, double v) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), fmt, v);
    throw std::domain_error(buf);
}

} // namespace

void OscillatorParams::validate() const {
    if (!std::isfinite(A) || A < 0.0) fail("OscillatorParams: A must be >= 0 (got %g)", A);
    if (!std::isfinite(alpha) || alpha <= 2.0) {
        fail("OscillatorParams: alpha must be > 2 (got %g)", alpha);
    }
    if (!std::isfinite(lambda) || lambda < 0.0) {
        fail("OscillatorParams: lambda must be >= 0 (got %g)", lambda);
    }
}

const char* to_string(Regime r) {
    switch (r) {
    case Regime::RS_FULL: return "RS_FULL";
    case Regime::S_IN_0_HALF: return "S_IN_0_HALF";
    case Regime::S_IN_HALF_1: return "S_IN_HALF_1";
    case Regime::S_EQ_1: return "S_EQ_1";
    case Regime::S_IN_1_2: return "S_IN_1_2";
    case Regime::S_EQ_2: return "S_EQ_2";
    case Regime::S_IN_2_3: return "S_IN_2_3";
    case Regime::S_IN_3_4: return "S_IN_3_4";
    case Regime::UNSUPPORTED: return "UNSUPPORTED";
    }
    return "?";
}

DerivedParams derive_params(const OscillatorParams& p) {
    p.validate();
    const double gamma = 1.0 + 0.5 * std::sqrt(1.0 + 4.0 * p.A);
    const double nu = 1.0 / (p.alpha - 2.0);
    return {gamma, nu, 2.0 * nu * (gamma - 1.0)};
}

Regime classify_regime(const DerivedParams& d, double tol) {
    if (!(tol > 0.0) || tol > 1e-6) throw std::domain_error("classify_regime: tol must be in (0, 1e-6]");
    const double s = d.s;
    if (!(s > 0.0)) throw std::domain_error("classify_regime: requires s > 0");
    if (s >= 4.0 - tol) return Regime::UNSUPPORTED;
    if (std::abs(s - 3.0) < tol) return Regime::UNSUPPORTED;
    if (std::abs(s - 1.0) < tol) return Regime::S_EQ_1;
    if (std::abs(s - 2.0) < tol) return Regime::S_EQ_2;
    if (s <= 0.5 + tol) return Regime::S_IN_0_HALF;
    if (s < 1.0) return Regime::S_IN_HALF_1;
    if (s < 2.0) return Regime::S_IN_1_2;
    if (s < 3.0) return Regime::S_IN_2_3;
    return Regime::S_IN_3_4;
}

double gk_energy(int n, double gamma) {
    if (n < 0) throw std::domain_error("gk_energy: requires n >= 0");
    if (!(gamma >= 1.5)) throw std::domain_error("gk_energy: requires gamma >= 3/2");
    return 4.0 * n + 2.0 * gamma;
}

double gk_wavefunction(int n, double gamma, double x) {
    if (n < 0) throw std::domain_error("gk_wavefunction: requires n >= 0");
    if (!(x > 0.0)) throw std::domain_error("gk_wavefunction: requires x > 0");
    // 1F1(-n; gamma; u) evaluated through the generalized Laguerre three-term
    // recurrence, which stays stable where the terminating series cancels.
    const double u = x * x;
    const double a = gamma - 1.0;
    double lk = 1.0;           // L_0
    double lk1 = 1.0 + a - u;  // L_1
    if (n == 0) lk1 = lk;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + a - u) * lk1 - (k + a) * lk) / (k + 1.0);
        lk = lk1;
        lk1 = next;
    }
    const double laguerre = (n == 0) ? 1.0 : lk1;
    double nfac = 1.0;
    for (int j = 2; j <= n; ++j) nfac *= j;
    const double norm = std::sqrt(2.0 * nfac / (sf::pochhammer(gamma, n) * sf::gamma(gamma)));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * norm * std::pow(x, gamma - 0.5) * std::exp(-0.5 * x * x) * laguerre;
}

GKState gk_state(int n, double gamma) { return {n, gk_energy(n, gamma)}; }

} // namespace spiked
