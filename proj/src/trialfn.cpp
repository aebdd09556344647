#include "spiked/trialfn.hpp"

#include "spiked/errors.hpp"
#include "spiked/quadrature.hpp"
#include "spiked/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace spiked {

namespace {

struct WParams {
    double gamma, nu, s;
    double lambda;
    double prefactor;   // 2 nu^s lambda^{s/2} / Gamma(s)
    double xi_scale;    // 2 nu sqrt(lambda)
};

WParams w_params(const OscillatorParams& p) {
    if (!(p.lambda > 0.0)) throw std::domain_error("w_alpha: requires lambda > 0");
    const DerivedParams d = derive_params(p);
    WParams w;
    w.gamma = d.gamma;
    w.nu = d.nu;
    w.s = d.s;
    w.lambda = p.lambda;
    w.prefactor = 2.0 * std::pow(d.nu, d.s) * std::pow(p.lambda, 0.5 * d.s) / sf::gamma(d.s);
    w.xi_scale = 2.0 * d.nu * std::sqrt(p.lambda);
    return w;
}

double bessel_argument(const WParams& w, double x) {
    return w.xi_scale * std::pow(x, -0.5 / w.nu);
}

} // namespace

double w_alpha(double x, const OscillatorParams& p) {
    if (!(x > 0.0)) throw std::domain_error("w_alpha: requires x > 0");
    const WParams w = w_params(p);
    const double xi = bessel_argument(w, x);
    if (xi > 730.0) return 0.0; // cutoff factor already below underflow
    if (2.0 * w.s * std::log(0.5 * xi) < -37.0) return 1.0; // deviation from 1 below epsilon
    return w.prefactor * std::pow(x, 1.0 - w.gamma) * sf::bessel_k(w.s, xi);
}

double dw_alpha(double x, const OscillatorParams& p) {
    if (!(x > 0.0)) throw std::domain_error("dw_alpha: requires x > 0");
    const WParams w = w_params(p);
    const double xi = bessel_argument(w, x);
    if (xi > 730.0) return 0.0;
    return w.prefactor * std::sqrt(w.lambda) * std::pow(x, -0.5 / w.nu - w.gamma) *
           sf::bessel_k(1.0 - w.s, xi);
}

TrialMoments trial_state_moments(const OscillatorParams& p, int i, double tol) {
    if (i < 0) throw std::domain_error("trial_state_moments: requires i >= 0");
    if (!(tol > 0.0)) throw std::domain_error("trial_state_moments: requires tol > 0");
    const DerivedParams d = derive_params(p);
    if (!(p.lambda > 0.0)) throw std::domain_error("trial_state_moments: requires lambda > 0");
    const double g = d.gamma;
    const double di = static_cast<double>(i);
    double ifac = 1.0;
    for (int j = 2; j <= i; ++j) ifac *= j;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    const double ci = sign * std::sqrt(2.0 * sf::pochhammer(g, i) / (ifac * sf::gamma(g)));

    // [(gamma - 1/2)/x - d/dx] psi_i, written without numerical differentiation.
    const auto dpart = [&](double x) {
        const double u = x * x;
        const double bracket = 2.0 * (g + di) / g * sf::hyp1f1(-di, g + 1.0, u) -
                               sf::hyp1f1(-di, g, u);
        return ci * std::pow(x, g + 0.5) * std::exp(-0.5 * u) * bracket;
    };

    const double split = std::pow(2.0 * d.nu * std::sqrt(p.lambda), 2.0 * d.nu);
    const long budget = 6000000;

    const auto q0 = integrate_semi_infinite(
        [&](double x) {
            const double v = w_alpha(x, p) * gk_wavefunction(i, g, x);
            return v * v;
        },
        split, tol, budget);
    const auto q1 = integrate_semi_infinite(
        [&](double x) {
            return w_alpha(x, p) * gk_wavefunction(i, g, x) * dw_alpha(x, p) * dpart(x);
        },
        split, tol, budget);
    const auto q2 = integrate_semi_infinite(
        [&](double x) {
            const double v = dw_alpha(x, p) * dpart(x);
            return v * v;
        },
        split, tol, budget);

    if (!(q0.value > 0.0)) throw numerical_error("trial_state_moments: nonpositive norm integral");

    TrialMoments m;
    m.norm_sq = 1.0 / q0.value;
    m.eta = gk_energy(i, g) + 2.0 * q1.value / q0.value;
    m.residual_sq = 4.0 * q2.value / q0.value;
    const double r0 = q0.error_estimate / q0.value;
    m.quad_error = std::max({m.norm_sq * r0,
                             2.0 * (q1.error_estimate + std::abs(q1.value) * r0) / q0.value,
                             4.0 * (q2.error_estimate + std::abs(q2.value) * r0) / q0.value});
    return m;
}

} // namespace spiked
