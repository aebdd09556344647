#include "spiked/expansions.hpp"

#include "spiked/errors.hpp"
#include "spiked/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace spiked {

namespace {

void sort_terms(EnergyExpansion& e) {
    std::stable_sort(e.terms.begin(), e.terms.end(), [](const ExpansionTerm& a, const ExpansionTerm& b) {
        if (a.lambda_power != b.lambda_power) return a.lambda_power < b.lambda_power;
        return a.log_power > b.log_power;
    });
}

// Coefficient of the leading non-power term lambda^s.
double coeff_lambda_s(const DerivedParams& d) {
    return 4.0 * (d.gamma - 1.0) * std::pow(d.nu, 2.0 * d.s) * sf::gamma(1.0 - d.s) /
           (sf::gamma(d.gamma) * sf::gamma(1.0 + d.s));
}

// Coefficient of the analytic lambda term away from the s = 1 boundary.
double coeff_lambda_linear(const DerivedParams& d) {
    return 2.0 * d.nu * sf::gamma(d.gamma - 0.5 / d.nu) / ((d.s - 1.0) * sf::gamma(d.gamma));
}

double coeff_lambda_sq(const DerivedParams& d) {
    return -2.0 * (3.0 - 2.0 * d.s) * std::pow(d.nu, 3) * sf::gamma(d.gamma - 1.0 / d.nu) /
           ((2.0 - d.s) * (1.0 - d.s) * (1.0 - d.s) * sf::gamma(d.gamma));
}

double coeff_lambda_cu(const DerivedParams& d) {
    return -2.0 * std::pow(d.nu, 5) * sf::gamma(d.gamma - 1.5 / d.nu) /
           (sf::gamma(d.gamma) * (1.0 - d.s) * (1.0 - d.s) * (2.0 - d.s));
}

} // namespace

EnergyExpansion rs_series(const OscillatorParams& p, int order) {
    if (order < 0 || order > 2) throw std::invalid_argument("rs_series: order must be 0, 1 or 2");
    if (!std::isfinite(p.A) || p.A < 0.0) throw std::domain_error("rs_series: A must be >= 0");
    if (!std::isfinite(p.alpha) || p.alpha <= 0.0) {
        throw std::domain_error("rs_series: alpha must be > 0");
    }
    const double gamma = 1.0 + 0.5 * std::sqrt(1.0 + 4.0 * p.A);

    EnergyExpansion e;
    e.regime = (p.alpha < gamma + 1.0) ? Regime::RS_FULL
                                       : classify_regime(derive_params(p));
    e.terms.push_back({2.0 * gamma, 0.0, 0});
    if (order >= 1) {
        if (!(p.alpha < 2.0 * gamma)) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "rs_series: first order requires alpha < 2*gamma (alpha=%g, 2*gamma=%g)",
                          p.alpha, 2.0 * gamma);
            throw std::domain_error(buf);
        }
        e.terms.push_back({sf::gamma(gamma - 0.5 * p.alpha) / sf::gamma(gamma), 1.0, 0});
    }
    if (order == 2) {
        if (!(p.alpha < gamma + 1.0)) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "rs_series: second order requires alpha < gamma + 1 (alpha=%g, gamma+1=%g)",
                          p.alpha, gamma + 1.0);
            throw std::domain_error(buf);
        }
        // second order from the summed spectral formula: the 4F3 carries the
        // i-dependence of the matrix elements and the squared first-order
        // coefficient carries their scale (the alpha = 2 exactly solvable
        // case, where the perturbation only shifts A, pins this form)
        const double first = sf::gamma(gamma - 0.5 * p.alpha) / sf::gamma(gamma);
        const double f = sf::hyp_pfq_unit({1.0, 1.0, 1.0 + 0.5 * p.alpha, 1.0 + 0.5 * p.alpha},
                                          {2.0, 2.0, gamma + 1.0});
        e.terms.push_back({-first * first * p.alpha * p.alpha / (16.0 * gamma) * f, 2.0, 0});
    }
    e.error_lambda_power = order + 1.0;
    e.error_log_power = 0;
    return e;
}

EnergyExpansion ground_expansion(const OscillatorParams& p) {
    const DerivedParams d = derive_params(p);
    const Regime r = classify_regime(d);
    const double g = d.gamma;
    const double gg = sf::gamma(g);

    EnergyExpansion e;
    e.regime = r;
    e.terms.push_back({2.0 * g, 0.0, 0});
    switch (r) {
    case Regime::S_IN_0_HALF:
        e.terms.push_back({coeff_lambda_s(d), d.s, 0});
        e.error_lambda_power = 2.0 * d.s;
        break;
    case Regime::S_IN_HALF_1:
        e.terms.push_back({coeff_lambda_s(d), d.s, 0});
        e.terms.push_back({coeff_lambda_linear(d), 1.0, 0});
        e.error_lambda_power = 2.0 * d.s;
        break;
    case Regime::S_EQ_1:
        e.terms.push_back({-1.0 / ((g - 1.0) * gg), 1.0, 1});
        e.terms.push_back({(-sf::euler_constant * (1.0 + g) + 2.0 * std::log(2.0 * (g - 1.0))) /
                               ((g - 1.0) * gg),
                           1.0, 0});
        e.error_lambda_power = 2.0;
        e.error_log_power = 2;
        break;
    case Regime::S_IN_1_2:
        e.terms.push_back({coeff_lambda_s(d), d.s, 0});
        e.terms.push_back({coeff_lambda_linear(d), 1.0, 0});
        e.error_lambda_power = 2.0;
        break;
    case Regime::S_EQ_2:
        e.terms.push_back({sf::gamma(0.5 / d.nu) / gg, 1.0, 0});
        e.terms.push_back({2.0 * std::pow(d.nu, 3) / gg, 2.0, 1});
        e.error_lambda_power = 2.0;
        break;
    case Regime::S_IN_2_3:
        e.terms.push_back({coeff_lambda_s(d), d.s, 0});
        e.terms.push_back({coeff_lambda_linear(d), 1.0, 0});
        e.terms.push_back({coeff_lambda_sq(d), 2.0, 0});
        e.error_lambda_power = 3.0;
        break;
    case Regime::S_IN_3_4:
        e.terms.push_back({coeff_lambda_s(d), d.s, 0});
        e.terms.push_back({coeff_lambda_linear(d), 1.0, 0});
        e.terms.push_back({coeff_lambda_sq(d), 2.0, 0});
        e.terms.push_back({coeff_lambda_cu(d), 3.0, 0});
        e.error_lambda_power = 4.0;
        break;
    default: {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "ground_expansion: no expansion for regime %s (s=%g)", to_string(r), d.s);
        throw std::domain_error(buf);
    }
    }
    sort_terms(e);
    return e;
}

EnergyExpansion excited_expansion(const OscillatorParams& p, int i) {
    if (i < 0) throw std::domain_error("excited_expansion: requires i >= 0");
    const DerivedParams d = derive_params(p);
    const Regime r = classify_regime(d);
    if (r != Regime::S_IN_0_HALF) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "excited_expansion: explicit excited-state terms exist only for "
                      "0 < s <= 1/2, i.e. alpha >= 2*(2*gamma - 1) (got s=%g, regime %s)",
                      d.s, to_string(r));
        throw std::domain_error(buf);
    }
    const double g = d.gamma;
    const double di = static_cast<double>(i);
    double ifac = 1.0;
    for (int j = 2; j <= i; ++j) ifac *= j;

    const double f1 = sf::hyp_pfq_unit({-di, 1.0 - g, 1.0}, {g, 1.0 - g - di});
    const double f2 = sf::hyp_pfq_unit({-di, 2.0 - g, 1.0}, {g, 2.0 - g - di});
    const double bracket = f1 - sf::pochhammer(g - 1.0, i) / (2.0 * sf::pochhammer(g, i)) * f2;
    const double coeff = 4.0 * sf::pochhammer(g, i) / (ifac * sf::gamma(g)) *
                         sf::gamma(1.0 - d.s) / (d.nu * sf::gamma(d.s)) *
                         std::pow(d.nu, 2.0 * d.s) * bracket;

    EnergyExpansion e;
    e.regime = r;
    e.terms.push_back({2.0 * (2.0 * di + g), 0.0, 0});
    e.terms.push_back({coeff, d.s, 0});
    e.error_lambda_power = 2.0 * d.s;
    return e;
}

double evaluate_expansion(const EnergyExpansion& e, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("evaluate_expansion: requires lambda > 0");
    const double lg = std::log(lambda);
    double sum = 0.0;
    for (const auto& t : e.terms) {
        double v = t.coeff;
        if (t.lambda_power != 0.0) v *= std::pow(lambda, t.lambda_power);
        for (int q = 0; q < t.log_power; ++q) v *= lg;
        sum += v;
    }
    return sum;
}

std::string to_string(const EnergyExpansion& e) {
    std::string out;
    char buf[96];
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const auto& t = e.terms[i];
        double c = t.coeff;
        if (i == 0) {
            std::snprintf(buf, sizeof(buf), "%.12g", c);
        } else {
            out += (c < 0.0) ? " - " : " + ";
            c = std::abs(c);
            std::snprintf(buf, sizeof(buf), "%.12g", c);
        }
        out += buf;
        if (t.lambda_power != 0.0) {
            std::snprintf(buf, sizeof(buf), "*lambda^%g", t.lambda_power);
            out += buf;
        }
        if (t.log_power == 1) {
            out += "*log(lambda)";
        } else if (t.log_power > 1) {
            std::snprintf(buf, sizeof(buf), "*log(lambda)^%d", t.log_power);
            out += buf;
        }
    }
    std::snprintf(buf, sizeof(buf), " + O(lambda^%g", e.error_lambda_power);
    out += buf;
    if (e.error_log_power > 0) {
        std::snprintf(buf, sizeof(buf), "*log^%d", e.error_log_power);
        out += buf;
    }
    out += ")";
    return out;
}

double laplace_1f1_product(double d, double s, double a, double b, double k, double a2, double b2,
                           double k2) {
    if (!(d > 0.0)) throw std::domain_error("laplace_1f1_product: requires d > 0");
    if (!(s > 0.0)) throw std::domain_error("laplace_1f1_product: requires s > 0");
    const auto bad_beta = [](double v) {
        return v <= 1e-9 && std::abs(v - std::round(v)) < 1e-9;
    };
    if (bad_beta(b) || bad_beta(b2)) {
        throw std::domain_error("laplace_1f1_product: b, b2 must not be nonpositive integers");
    }
    const auto terminating = [](double v) {
        return v <= 1e-9 && std::abs(v - std::round(v)) < 1e-9;
    };
    const bool term_a = terminating(a);
    const bool term_a2 = terminating(a2);
    if (!term_a && !(std::abs(k / s) < 1.0)) {
        throw std::domain_error("laplace_1f1_product: requires |k/s| < 1 unless 1F1(a;b;kt) terminates");
    }
    if (!term_a2 && !(std::abs(k2 / s) < 1.0)) {
        throw std::domain_error("laplace_1f1_product: requires |k2/s| < 1 unless 1F1(a2;b2;k2t) terminates");
    }

    const double x = k / s;
    const double x2 = k2 / s;
    const long m_max = term_a ? std::llround(-a) : 200000;

    long double ratio = 1.0L; // (a)_m (d)_m / ((b)_m m!) * x^m
    long double sum = 0.0L;
    int below = 0, growing = 0;
    long double prev_mag = -1.0L;
    for (long m = 0; m <= m_max; ++m) {
        const long double term = ratio * sf::hyp2f1(a2, d + m, b2, x2);
        sum += term;
        const long double mag = std::abs(term);
        if (m >= 1 && !term_a) {
            if (mag < 1e-12L * std::abs(sum)) {
                if (++below >= 3) break;
            } else {
                below = 0;
            }
            growing = (prev_mag >= 0.0L && mag > prev_mag && mag > std::abs(sum)) ? growing + 1 : 0;
            if (growing >= 8 || m == m_max) {
                throw numerical_error("laplace_1f1_product: outer series failed to converge");
            }
        }
        prev_mag = mag;
        ratio *= (a + m) * (d + m) / ((b + m) * (m + 1.0L)) * x;
    }
    return static_cast<double>(sum) * std::pow(s, -d) * sf::gamma(d);
}

} // namespace spiked
