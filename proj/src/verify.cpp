#include "spiked/verify.hpp"

#include "spiked/expansions.hpp"
#include "spiked/quadrature.hpp"
#include "spiked/reference.hpp"
#include "spiked/specfun.hpp"
#include "spiked/trialfn.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace spiked::verify {

namespace {

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

const ExpansionTerm* find_term(const EnergyExpansion& e, double p, int q) {
    for (const auto& t : e.terms) {
        if (std::abs(t.lambda_power - p) < 1e-12 && t.log_power == q) return &t;
    }
    return nullptr;
}

void check_coeff(std::vector<CheckResult>& out, const std::string& name,
                 const EnergyExpansion& e, double p, int q, double expected, double tol) {
    const ExpansionTerm* t = find_term(e, p, q);
    if (!t) {
        out.push_back({name, false, "term not present"});
        return;
    }
    const double err = std::abs(t->coeff - expected) / std::max(1.0, std::abs(expected));
    out.push_back({name, err <= tol, fmt("coeff %.14g vs %.14g (rel diff %.2e)", t->coeff, expected,
                                         err)});
}

} // namespace

std::vector<CheckResult> suite_harrell_reductions() {
    using sf::euler_constant;
    using sf::gamma;
    using sf::sqrt_pi;
    std::vector<CheckResult> out;
    const double tol = 1e-12;

    // The A = 0 special cases, coded exactly as published for gamma = 3/2,
    // with nu = 1/(alpha - 2) doubling as the regime index.
    const auto lead = [&](double nu) {
        return 4.0 * std::pow(nu, 2.0 * nu) * gamma(1.0 - nu) / (sqrt_pi * gamma(1.0 + nu));
    };

    for (double alpha : {4.0, 4.5, 6.0}) { // alpha >= 4: single lambda^nu correction
        const double nu = 1.0 / (alpha - 2.0);
        const auto e = ground_expansion({0.0, alpha, 0.0});
        check_coeff(out, fmt("alpha>=4 lambda^s coeff, alpha=%g", alpha), e, nu, 0, lead(nu), tol);
    }
    for (double alpha : {3.2, 3.7}) { // 3 < alpha < 4
        const double nu = 1.0 / (alpha - 2.0);
        const auto e = ground_expansion({0.0, alpha, 0.0});
        check_coeff(out, fmt("3<alpha<4 lambda^s coeff, alpha=%g", alpha), e, nu, 0, lead(nu), tol);
        const double lam = -4.0 * nu * gamma(0.5 * (3.0 - 1.0 / nu)) / ((1.0 - nu) * sqrt_pi);
        check_coeff(out, fmt("3<alpha<4 lambda coeff, alpha=%g", alpha), e, 1.0, 0, lam, tol);
    }
    { // alpha = 3: log term plus Euler-constant term
        const auto e = ground_expansion({0.0, 3.0, 0.0});
        check_coeff(out, "alpha=3 lambda*log coeff", e, 1.0, 1, -4.0 / sqrt_pi, tol);
        check_coeff(out, "alpha=3 lambda coeff", e, 1.0, 0, -10.0 * euler_constant / sqrt_pi, tol);
    }
    for (double alpha : {2.6, 2.9}) { // 5/2 < alpha < 3
        const double nu = 1.0 / (alpha - 2.0);
        const auto e = ground_expansion({0.0, alpha, 0.0});
        check_coeff(out, fmt("5/2<alpha<3 lambda^s coeff, alpha=%g", alpha), e, nu, 0, lead(nu), tol);
        check_coeff(out, fmt("5/2<alpha<3 lambda coeff, alpha=%g", alpha), e, 1.0, 0,
                    2.0 * gamma(0.5 * (3.0 - alpha)) / sqrt_pi, tol);
    }
    { // alpha = 5/2: corrected log coefficient 32/sqrt(pi)
        const auto e = ground_expansion({0.0, 2.5, 0.0});
        check_coeff(out, "alpha=5/2 lambda coeff", e, 1.0, 0, 2.0 * gamma(0.25) / sqrt_pi, tol);
        check_coeff(out, "alpha=5/2 lambda^2*log coeff", e, 2.0, 1, 32.0 / sqrt_pi, tol);
    }
    for (double alpha : {2.36, 2.45}) { // 7/3 < alpha < 5/2
        const double nu = 1.0 / (alpha - 2.0);
        const auto e = ground_expansion({0.0, alpha, 0.0});
        check_coeff(out, fmt("7/3<alpha<5/2 lambda^s coeff, alpha=%g", alpha), e, nu, 0, lead(nu),
                    tol);
        const double lam = 4.0 * nu * gamma(1.5 - 0.5 / nu) / ((nu - 1.0) * sqrt_pi);
        check_coeff(out, fmt("7/3<alpha<5/2 lambda coeff, alpha=%g", alpha), e, 1.0, 0, lam, tol);
        const double lam2 = -4.0 * (3.0 - 2.0 * nu) * std::pow(nu, 3) * gamma(1.5 - 1.0 / nu) /
                            ((2.0 - nu) * (1.0 - nu) * (1.0 - nu) * sqrt_pi);
        check_coeff(out, fmt("7/3<alpha<5/2 lambda^2 coeff, alpha=%g", alpha), e, 2.0, 0, lam2, tol);
    }
    return out;
}

std::vector<CheckResult> suite_lemma6(unsigned seed) {
    std::vector<CheckResult> out;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    for (int trial = 0; trial < 20; ++trial) {
        const double d = 0.4 + 2.4 * u01(rng);
        const double s = 1.0 + 2.0 * u01(rng);
        const bool ta = u01(rng) < 0.5;
        const bool ta2 = u01(rng) < 0.5;
        const double a = ta ? -static_cast<double>(1 + (rng() % 3)) : 0.3 + 1.4 * u01(rng);
        const double a2 = ta2 ? -static_cast<double>(1 + (rng() % 3)) : 0.3 + 1.4 * u01(rng);
        const double b = 0.8 + 2.0 * u01(rng);
        const double b2 = 0.8 + 2.0 * u01(rng);
        // keep the defining integral convergent when neither factor terminates
        double k = (ta ? (2.0 * u01(rng) - 1.0) : (0.8 * u01(rng) - 0.4)) * s;
        double k2 = (ta2 ? (2.0 * u01(rng) - 1.0) : (0.8 * u01(rng) - 0.4)) * s;
        if (!ta && !ta2 && k + k2 > 0.8 * s) {
            k *= 0.4;
            k2 *= 0.4;
        }

        const double series = laplace_1f1_product(d, s, a, b, k, a2, b2, k2);
        const auto quad = integrate_semi_infinite(
            [&](double t) {
                return std::pow(t, d - 1.0) * std::exp(-s * t) * sf::hyp1f1(a, b, k * t) *
                       sf::hyp1f1(a2, b2, k2 * t);
            },
            1.0, 1e-11);
        const double scale = std::max(std::abs(series), std::abs(quad.value));
        const double err = std::abs(series - quad.value) / std::max(scale, 1e-30);
        out.push_back({fmt("draw d=%.3g s=%.3g k=%.3g", d, s, k) + fmt(" k2=%.3g", k2),
                       err <= 1e-8, fmt("series %.12g vs quadrature %.12g (rel %.2e)", series,
                                        quad.value, err)});
    }
    return out;
}

std::vector<CheckResult> suite_rs_first_order() {
    std::vector<CheckResult> out;
    const double pairs[3][2] = {{1.5, 1.0}, {2.0, 2.5}, {2.5, 3.0}};
    for (const auto& ga : pairs) {
        const double g = ga[0], alpha = ga[1];
        const auto quad = integrate_semi_infinite(
            [&](double x) {
                const double psi = gk_wavefunction(0, g, x);
                return psi * psi * std::pow(x, -alpha);
            },
            1.0, 1e-12);
        const double expected = sf::gamma(g - 0.5 * alpha) / sf::gamma(g);
        const double err = std::abs(quad.value - expected) / std::abs(expected);
        out.push_back({fmt("<x^-alpha> gamma=%g alpha=%g", g, alpha), err <= 1e-10,
                       fmt("quadrature %.13g vs %.13g (rel %.2e)", quad.value, expected, err)});
    }
    return out;
}

std::vector<CheckResult> suite_alpha52_coefficient() {
    std::vector<CheckResult> out;
    const double linear = 2.0 * sf::gamma(0.25) / sf::sqrt_pi;
    const double corrected = 32.0 / sf::sqrt_pi;
    const double original = 16.0 / sf::sqrt_pi;

    // log-spaced lambda in [1e-5, 1e-3]; fit r/lambda^2 = c*log(lambda) + d
    const int npts = 8;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int j = 0; j < npts; ++j) {
        const double lam = std::pow(10.0, -5.0 + 2.0 * j / (npts - 1.0));
        const OscillatorParams p{0.0, 2.5, lam};
        const auto ref = solve_reference(p, 0);
        const double y = (ref.value - 3.0 - linear * lam) / (lam * lam);
        const double x = std::log(lam);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double c = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
    const double dcoef = (sy - c * sx) / npts;

    const double dist_corr = std::abs(c - corrected);
    const double dist_orig = std::abs(c - original);
    out.push_back({"fitted lambda^2*log coefficient",
                   dist_corr <= 0.25 * corrected,
                   fmt("c = %.6g, corrected 32/sqrt(pi) = %.6g (rel dev %.2g)", c, corrected,
                       dist_corr / corrected)});
    out.push_back({"corrected coefficient preferred over 16/sqrt(pi)",
                   dist_orig >= 2.0 * dist_corr,
                   fmt("|c-16/sqrt(pi)| = %.4g vs 2*|c-32/sqrt(pi)| = %.4g (d=%.4g)", dist_orig,
                       2.0 * dist_corr, dcoef)});
    return out;
}

std::vector<CheckResult> suite_sandwich() {
    std::vector<CheckResult> out;
    const double lam = 1e-4;
    const OscillatorParams sets[6] = {
        {0.0, 4.0, lam},  // s = 1/2
        {0.0, 3.5, lam},  // 1/2 < s < 1
        {0.0, 3.0, lam},  // s = 1
        {0.0, 2.8, lam},  // 1 < s < 2
        {0.0, 2.5, lam},  // s = 2
        {0.75, 6.0, lam}, // gamma = 2, s = 1/2
    };
    for (const auto& p : sets) {
        const DerivedParams d = derive_params(p);
        const auto m = trial_state_moments(p, 0, 1e-10);
        const auto kt = kato_temple(m.eta, m.residual_sq, gk_energy(1, d.gamma) - 0.5);
        const auto ref = solve_reference(p, 0);
        const bool pass = kt.valid && kt.lower <= ref.value && ref.value <= kt.upper;
        out.push_back({fmt("A=%g alpha=%g ", p.A, p.alpha) + to_string(classify_regime(d)), pass,
                       fmt("[%.10g, %.10g]", kt.lower, kt.upper) + fmt(" E_ref %.10g", ref.value)});
    }
    return out;
}

std::vector<CheckResult> suite_lambda2_comparison() {
    std::vector<CheckResult> out;
    for (double alpha : {2.4, 2.3}) {
        const OscillatorParams base{0.0, alpha, 0.0};
        const auto d = derive_params(base);
        const auto g = ground_expansion(base);
        double cs = 0.0, c1 = 0.0, c2_nonpower = 0.0, c3 = 0.0;
        for (const auto& t : g.terms) {
            if (std::abs(t.lambda_power - d.s) < 1e-12) cs = t.coeff;
            else if (t.lambda_power == 1.0) c1 = t.coeff;
            else if (t.lambda_power == 2.0) c2_nonpower = t.coeff;
            else if (t.lambda_power == 3.0) c3 = t.coeff;
        }
        const auto rs = rs_series(base, 2);
        const double c2_rs = rs.terms.back().coeff;

        // fit (E_ref - known terms)/lambda^2 = c2 + e*lambda
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (double lam : {3e-4, 6e-4, 1.2e-3, 2.5e-3, 5e-3}) {
            OscillatorParams p = base;
            p.lambda = lam;
            const auto r = solve_reference(p, 0);
            const double resid = r.value - (2.0 * d.gamma + cs * std::pow(lam, d.s) + c1 * lam +
                                            c3 * lam * lam * lam);
            const double y = resid / (lam * lam);
            sx += lam, sy += y, sxx += lam * lam, sxy += lam * y;
            ++n;
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double c2_fit = (sy - slope * sx) / n;

        const double dev_np = std::abs(c2_fit - c2_nonpower) / std::abs(c2_nonpower);
        const double dev_rs = std::abs(c2_fit - c2_rs) / std::abs(c2_rs);
        out.push_back({fmt("lambda^2 coefficient, alpha=%g", alpha),
                       std::min(dev_np, dev_rs) <= 0.1,
                       fmt("solver fit %.5g; ", c2_fit) +
                           fmt("non-power %.5g (dev %.2g), ", c2_nonpower, dev_np) +
                           fmt("power series %.5g (dev %.2g)", c2_rs, dev_rs)});
    }
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "harrell-reductions", "lemma6",   "rs-first-order",
        "alpha52-coefficient", "sandwich", "lambda2-comparison",
    };
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "harrell-reductions") return suite_harrell_reductions();
    if (name == "lemma6") return suite_lemma6();
    if (name == "rs-first-order") return suite_rs_first_order();
    if (name == "alpha52-coefficient") return suite_alpha52_coefficient();
    if (name == "sandwich") return suite_sandwich();
    if (name == "lambda2-comparison") return suite_lambda2_comparison();
    throw std::domain_error("unknown verify suite: " + name);
}

} // namespace spiked::verify
