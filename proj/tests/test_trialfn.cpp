#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spiked/expansions.hpp"
#include "spiked/model.hpp"
#include "spiked/specfun.hpp"
#include "spiked/trialfn.hpp"

#include <cmath>

using namespace spiked;

TEST_CASE("w_alpha limits and closed value") {
    const OscillatorParams p{0.0, 4.0, 0.01};
    CHECK(w_alpha(1e-8, p) < 1e-10);
    // 1 - W decays like sqrt(lambda)/x here: exact at x = 50, limit at x = 1e8
    CHECK(w_alpha(50.0, p) == doctest::Approx(std::exp(-0.1 / 50.0)).epsilon(1e-12));
    CHECK(std::abs(w_alpha(1e8, p) - 1.0) < 1e-8);

    // direct Bessel form at x = 1: (2 nu^s / Gamma(s)) lambda^{s/2} K_s(2 nu sqrt(lambda))
    const auto d = derive_params(p);
    const double want = 2.0 * std::pow(d.nu, d.s) / sf::gamma(d.s) *
                        std::pow(p.lambda, 0.5 * d.s) *
                        sf::bessel_k(d.s, 2.0 * d.nu * std::sqrt(p.lambda));
    CHECK(w_alpha(1.0, p) == doctest::Approx(want).epsilon(1e-12));
    // for alpha = 4, A = 0 the cutoff collapses to exp(-sqrt(lambda)/x)
    CHECK(w_alpha(1.0, p) == doctest::Approx(std::exp(-0.1)).epsilon(1e-12));

    CHECK_THROWS_AS(w_alpha(0.0, p), std::domain_error);
    CHECK_THROWS_AS(w_alpha(1.0, OscillatorParams{0.0, 4.0, 0.0}), std::domain_error);
}

TEST_CASE("w_alpha is monotone from 0 to 1") {
    for (double alpha : {3.0, 4.0, 2.5}) {
        const OscillatorParams p{0.5, alpha, 1e-3};
        double prev = -1.0;
        for (double x = 0.05; x < 30.0; x *= 1.6) {
            const double w = w_alpha(x, p);
            CHECK(w >= prev);
            CHECK(w <= 1.0 + 1e-12);
            prev = w;
        }
    }
}

TEST_CASE("dw_alpha derivative, positivity and the cutoff equation") {
    const OscillatorParams p{0.0, 4.0, 0.01};
    const double h = 1e-5;
    const double fd = (w_alpha(1.0 + h, p) - w_alpha(1.0 - h, p)) / (2.0 * h);
    CHECK(std::abs(dw_alpha(1.0, p) - fd) / std::abs(fd) < 1e-6);

    for (double x : {0.2, 1.0, 5.0}) CHECK(dw_alpha(x, p) > 0.0);

    // W'' + (2 gamma - 1)/x W' - lambda x^-alpha W = 0 via second differences
    for (OscillatorParams q : {OscillatorParams{0.0, 4.0, 0.01}, OscillatorParams{2.0, 3.5, 0.02}}) {
        const auto d = derive_params(q);
        const double hh = 1e-3;
        const double x = 1.0;
        const double wm = w_alpha(x - hh, q), w0 = w_alpha(x, q), wp = w_alpha(x + hh, q);
        const double d2 = (wp - 2.0 * w0 + wm) / (hh * hh);
        const double d1 = (wp - wm) / (2.0 * hh);
        const double residual =
            d2 + (2.0 * d.gamma - 1.0) / x * d1 - q.lambda * std::pow(x, -q.alpha) * w0;
        const double scale = std::abs(d2) + std::abs((2.0 * d.gamma - 1.0) / x * d1) +
                             std::abs(q.lambda * std::pow(x, -q.alpha) * w0);
        CHECK(std::abs(residual) / scale < 1e-6);
    }
}

TEST_CASE("integer regime index reduces to the first-order Bessel form") {
    // s = 1 (alpha = 2 gamma): W(z) = z^{1-gamma}/(gamma-1) K_1(z^{1-gamma}/(gamma-1))
    // in the scaled variable z = lambda^-nu x
    const OscillatorParams p{2.0, 5.0, 1e-3}; // gamma = 2.5, alpha = 2 gamma
    const auto d = derive_params(p);
    REQUIRE(d.s == doctest::Approx(1.0).epsilon(1e-14));
    for (double x : {0.5, 1.0, 2.0}) {
        const double z = std::pow(p.lambda, -d.nu) * x;
        const double arg = std::pow(z, 1.0 - d.gamma) / (d.gamma - 1.0);
        const double want = arg * sf::bessel_k(1.0, arg);
        CHECK(w_alpha(x, p) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("trial moments: lambda -> 0 limits") {
    const auto m = trial_state_moments({0.0, 4.0, 1e-10}, 0, 1e-10);
    CHECK(std::abs(m.norm_sq - 1.0) < 1e-4);
    CHECK(m.residual_sq >= 0.0);
    CHECK(m.residual_sq < 1e-8);
    CHECK(std::abs(m.eta - 3.0) < 1e-4);
}

TEST_CASE("trial moments against the leading expansion terms") {
    const OscillatorParams p{0.0, 4.0, 0.01};
    const auto m = trial_state_moments(p, 0, 1e-10);
    // truncated norm expansion 1 + (4/sqrt(pi)) sqrt(lambda); the next order
    // enters with a coefficient near 1.5, so the window is a couple of lambda
    const double norm_trunc = 1.0 + 2.2567583341910251 * 0.1;
    CHECK(std::abs(m.norm_sq - norm_trunc) < 0.025);
    CHECK(std::abs((m.eta - 3.0) - 0.22567583341910251) < 0.025);
    // frozen values from 30-digit direct quadrature of the closed-form
    // integrands (W = exp(-sqrt(lambda)/x) at alpha = 4, A = 0)
    CHECK(m.norm_sq == doctest::Approx(1.24019488588876).epsilon(1e-9));
    CHECK(m.eta == doctest::Approx(3.20698137224911).epsilon(1e-9));
    CHECK(m.residual_sq == doctest::Approx(0.0566740101603522).epsilon(1e-8));
}

TEST_CASE("residual scaling across the lambda grid") {
    // ||(H - E) phi||^2 = O(lambda^{2s}) for s < 1, O(lambda^2) for 1 < s < 2
    for (double alpha : {4.0, 3.5}) {
        const auto d = derive_params({0.0, alpha, 1e-6});
        double lo = 1e300, hi = 0.0;
        for (double lam : {1e-6, 1e-5, 1e-4}) {
            const auto m = trial_state_moments({0.0, alpha, lam}, 0, 1e-11);
            const double ratio = m.residual_sq / std::pow(lam, 2.0 * d.s);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(hi < 1e4);     // bounded
        CHECK(hi / lo < 10.0); // and roughly constant
    }
    {
        double lo = 1e300, hi = 0.0;
        for (double lam : {1e-6, 1e-5, 1e-4}) {
            const auto m = trial_state_moments({0.0, 2.8, lam}, 0, 1e-11);
            const double ratio = m.residual_sq / (lam * lam);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(hi < 1e4);
        CHECK(hi / lo < 10.0);
    }
}

TEST_CASE("excited trial moments track the excited expansion") {
    const OscillatorParams p{0.0, 6.0, 1e-6};
    const auto d = derive_params(p);
    const auto m = trial_state_moments(p, 1, 1e-11);
    const auto e = excited_expansion(p, 1);
    const double predicted = evaluate_expansion(e, p.lambda);
    // eta agrees with the expansion through its stated error order lambda^{2s}
    CHECK(std::abs(m.eta - predicted) < 20.0 * std::pow(p.lambda, 2.0 * d.s));
}
