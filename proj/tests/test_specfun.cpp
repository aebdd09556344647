#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spiked/errors.hpp"
#include "spiked/specfun.hpp"

#include <cmath>
#include <vector>

using namespace spiked;

namespace {

// Independent ascending-series oracle for I_nu, long double through libm's
// lgammal; never touches the library implementation.
long double bessel_i_oracle(long double nu, long double z, int terms) {
    long double sum = 0.0L;
    for (int k = 0; k < terms; ++k) {
        const long double u = nu + k + 1.0L;
        // lgammal returns log|Gamma|; restore the sign on the negative axis
        long double sign = 1.0L;
        if (u < 0.0L) {
            if (u == floorl(u)) continue; // 1/Gamma at a pole vanishes
            if (static_cast<long long>(floorl(u)) % 2 != 0) sign = -1.0L;
        }
        const long double lg = lgammal(k + 1.0L) + lgammal(u);
        sum += sign * expl((nu + 2.0L * k) * logl(0.5L * z) - lg);
    }
    return sum;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

} // namespace

TEST_CASE("euler constant to ten digits") {
    CHECK(std::abs(sf::euler_constant - 0.5772156649) < 5e-11);
}

TEST_CASE("gamma at classical points") {
    CHECK(sf::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rel_err(sf::gamma(0.5), 1.7724538509055160273) < 1e-13);
    CHECK(rel_err(sf::gamma(2.5), 1.3293403881791370205) < 1e-13);
    CHECK(rel_err(sf::gamma(10.0), 362880.0) < 1e-13);
    CHECK(rel_err(sf::gamma(-1.5), 2.3632718012073547031) < 1e-12);
}

TEST_CASE("gamma poles and overflow") {
    CHECK_THROWS_AS(sf::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(sf::gamma(-3.0), std::domain_error);
    CHECK_THROWS_AS(sf::gamma(200.0), numerical_error);
}

TEST_CASE("gamma recurrence over (0.1, 20)") {
    for (double x = 0.1; x < 20.0; x += 0.233) {
        const double lhs = sf::gamma(x + 1.0);
        CHECK(std::abs(lhs - x * sf::gamma(x)) / std::abs(lhs) < 1e-12);
    }
}

TEST_CASE("reflection consistency") {
    for (double nu = 0.05; nu < 1.0; nu += 0.05) {
        const double v = sf::gamma(nu) * sf::gamma(1.0 - nu) * std::sin(nu * sf::pi) / sf::pi;
        CHECK(std::abs(v - 1.0) < 1e-10);
    }
}

TEST_CASE("pochhammer basics and negative-integer truncation") {
    CHECK(sf::pochhammer(3.7, 0) == 1.0);
    CHECK(sf::pochhammer(-12.3, 0) == 1.0);
    CHECK(sf::pochhammer(2.0, 3) == 24.0);
    CHECK(sf::pochhammer(-3.0, 5) == 0.0);
    CHECK(sf::pochhammer(-3.0, 3) == -6.0); // (-1)^3 3!/0!
}

TEST_CASE("pochhammer-gamma bridge for a > 0") {
    for (double a : {0.3, 1.0, 2.7, 5.5}) {
        for (int k : {1, 2, 5, 11}) {
            const double lhs = sf::pochhammer(a, k);
            const double rhs = sf::gamma(a + k) / sf::gamma(a);
            CHECK(rel_err(lhs, rhs) < 1e-11);
        }
    }
}

TEST_CASE("digamma at integer points") {
    CHECK(std::abs(sf::digamma(1.0) + sf::euler_constant) < 1e-13);
    CHECK(std::abs(sf::digamma(2.0) - (1.0 - sf::euler_constant)) < 1e-13);
    CHECK(std::abs(sf::digamma(5.0) - (25.0 / 12.0 - sf::euler_constant)) < 1e-13);
}

TEST_CASE("bessel_i against closed forms and the series oracle") {
    CHECK(sf::bessel_i(0.0, 0.0) == 1.0);
    // half-integer closed form sqrt(2/(pi z)) sinh z
    CHECK(rel_err(sf::bessel_i(0.5, 1.0), 0.93767488824548765) < 1e-12);
    const double want = static_cast<double>(bessel_i_oracle(0.3L, 2.0L, 40));
    CHECK(rel_err(sf::bessel_i(0.3, 2.0), want) < 1e-12);
    for (double nu : {-2.5, -0.7, 0.0, 1.0, 3.2}) {
        for (double z : {0.05, 0.8, 3.0, 9.0}) {
            CHECK(rel_err(sf::bessel_i(nu, z),
                          static_cast<double>(bessel_i_oracle(nu, z, 80))) < 1e-12);
        }
    }
    CHECK_THROWS_AS(sf::bessel_i(0.0, 800.0), numerical_error);
}

TEST_CASE("bessel_k half-integer closed forms") {
    // K_{1/2}(z) = sqrt(pi/(2z)) e^{-z}
    for (double z : {0.01, 0.5, 1.0, 2.5, 10.0, 40.0}) {
        const double want = std::sqrt(0.5 * sf::pi / z) * std::exp(-z);
        CHECK(rel_err(sf::bessel_k(0.5, z), want) < 1e-10);
    }
    // K_{3/2}(z) = sqrt(pi/(2z)) e^{-z} (1 + 1/z)
    for (double z : {0.3, 1.0, 5.0, 20.0}) {
        const double want = std::sqrt(0.5 * sf::pi / z) * std::exp(-z) * (1.0 + 1.0 / z);
        CHECK(rel_err(sf::bessel_k(1.5, z), want) < 1e-10);
    }
    CHECK(rel_err(sf::bessel_k(0.5, 1.0), 0.46106850444789455) < 1e-12);
}

TEST_CASE("bessel_k symmetry in the order") {
    for (double nu : {0.3, 0.5, 1.2, 2.7, 4.6}) {
        for (double z : {1e-5, 0.1, 1.0, 4.0, 12.0, 28.0}) {
            CHECK(rel_err(sf::bessel_k(-nu, z), sf::bessel_k(nu, z)) < 1e-11);
        }
    }
}

TEST_CASE("bessel_k integer orders and continuity across the integer limit") {
    // K_0 small-z law
    const double k0 = sf::bessel_k(0.0, 1e-3);
    CHECK(rel_err(k0, -std::log(5e-4) - sf::euler_constant) < 1e-5);
    // continuity: the deviation from the integer-order value shrinks with the
    // offset (K varies smoothly in the order, |d log K / d nu| = O(1) here)
    for (int n : {0, 1, 2, 3}) {
        const double exact = sf::bessel_k(static_cast<double>(n), 0.7);
        for (double delta : {3e-5, 2e-4, 1e-3}) {
            CHECK(rel_err(sf::bessel_k(n + delta, 0.7), exact) < 10.0 * delta);
            if (n > 0) CHECK(rel_err(sf::bessel_k(n - delta, 0.7), exact) < 10.0 * delta);
        }
        // interpolated band and raw series band agree across the band edge
        CHECK(rel_err(sf::bessel_k(n + 0.9e-4, 0.7), sf::bessel_k(n + 1.1e-4, 0.7)) < 5e-4);
    }
    // cross-check K_1, K_2 against the recurrence K_{n+1} = K_{n-1} + (2n/z) K_n
    for (double z : {0.4, 1.1, 1.9}) {
        const double want = sf::bessel_k(0.0, z) + 2.0 / z * sf::bessel_k(1.0, z);
        CHECK(rel_err(sf::bessel_k(2.0, z), want) < 1e-11);
    }
}

TEST_CASE("bessel_k small-z power law") {
    for (double nu : {0.4, 0.5, 0.6, 0.75, 0.9}) {
        const double v = sf::bessel_k(nu, 1e-6) * 2.0 * std::pow(0.5e-6, nu) / sf::gamma(nu);
        CHECK(std::abs(v - 1.0) < 1e-4);
    }
}

TEST_CASE("bessel_k solves the modified Bessel equation") {
    // y'' + y'/x - (1 + nu^2/x^2) y = 0, central differences; sample points keep
    // the stencil away from the method crossover near z = 2.
    const double h = 2e-4;
    for (double nu : {0.35, 0.5, 1.3, 2.6, 4.4}) {
        for (double z : {0.6, 1.2, 1.8, 3.5, 5.0, 9.5}) {
            const double ym = sf::bessel_k(nu, z - h);
            const double y0 = sf::bessel_k(nu, z);
            const double yp = sf::bessel_k(nu, z + h);
            const double d2 = (yp - 2.0 * y0 + ym) / (h * h);
            const double d1 = (yp - ym) / (2.0 * h);
            const double residual = d2 + d1 / z - (1.0 + nu * nu / (z * z)) * y0;
            const double scale = std::abs(d2) + std::abs(d1 / z) +
                                 std::abs((1.0 + nu * nu / (z * z)) * y0);
            CHECK(std::abs(residual) / scale < 1e-6);
        }
    }
}

TEST_CASE("bessel_k derivative identity") {
    // z K_nu'(z) + nu K_nu(z) + z K_{nu-1}(z) = 0 (equivalently
    // z K_nu'(z) - nu K_nu(z) + z K_{nu+1}(z) = 0), by central differences.
    const double h = 1e-5;
    for (double nu : {0.35, 0.8, 1.6, 2.4, 3.7}) {
        for (double z : {0.5, 1.0, 1.7, 4.0, 8.0}) {
            const double dk = (sf::bessel_k(nu, z + h) - sf::bessel_k(nu, z - h)) / (2.0 * h);
            const double r1 = z * dk + nu * sf::bessel_k(nu, z) + z * sf::bessel_k(nu - 1.0, z);
            const double r2 = z * dk - nu * sf::bessel_k(nu, z) + z * sf::bessel_k(nu + 1.0, z);
            const double scale = std::abs(z * dk) + std::abs(nu * sf::bessel_k(nu, z)) + 1e-300;
            CHECK(std::abs(r1) / scale < 1e-6);
            CHECK(std::abs(r2) / scale < 1e-6);
        }
    }
}

TEST_CASE("hyp1f1 basics") {
    CHECK(sf::hyp1f1(0.0, 1.7, 123.0) == 1.0);
    CHECK(sf::hyp1f1(-1.0, 2.0, 3.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(sf::hyp1f1(0.7, 1.9, 0.0) == 1.0);
    // 1F1(1; 2; z) = (e^z - 1)/z
    CHECK(rel_err(sf::hyp1f1(1.0, 2.0, 0.9), (std::exp(0.9) - 1.0) / 0.9) < 1e-12);
    // Kummer-transformed negative argument
    CHECK(rel_err(sf::hyp1f1(1.0, 2.0, -30.0), (1.0 - std::exp(-30.0)) / 30.0) < 1e-12);
    CHECK_THROWS_AS(sf::hyp1f1(0.5, -2.0, 1.0), std::domain_error);
}

TEST_CASE("hyp1f1 derivative identity") {
    // d/dz 1F1(a;b;z) = 1F1(a;b;z) - ((b-a)/b) 1F1(a;b+1;z)
    const double h = 1e-5;
    for (double a : {-2.0, 0.5, 1.3}) {
        for (double b : {1.5, 2.2}) {
            for (double z : {0.3, 1.1, 2.5}) {
                const double fd = (sf::hyp1f1(a, b, z + h) - sf::hyp1f1(a, b, z - h)) / (2.0 * h);
                const double rhs =
                    sf::hyp1f1(a, b, z) - (b - a) / b * sf::hyp1f1(a, b + 1.0, z);
                CHECK(std::abs(fd - rhs) / std::max(1.0, std::abs(rhs)) < 1e-7);
            }
        }
    }
}

TEST_CASE("hyp_pfq_unit terminating sums") {
    // Chu-Vandermonde: 2F1(-2, 1; 3; 1) = (3-1)_2/(3)_2 = 1/2
    CHECK(sf::hyp_pfq_unit({-2.0, 1.0}, {3.0}) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sf::hyp_pfq_unit({0.0, 1.3, -7.7}, {2.4, 0.9}) == 1.0);
    for (int n : {1, 2, 5}) {
        for (double a : {0.4, 1.7}) {
            for (double c : {2.3, 4.1}) {
                const double want = sf::pochhammer(c - a, n) / sf::pochhammer(c, n);
                CHECK(rel_err(sf::hyp_pfq_unit({-static_cast<double>(n), a}, {c}), want) < 1e-12);
            }
        }
    }
}

TEST_CASE("hyp_pfq_unit nonterminating against the Gauss closed form") {
    // 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b))
    const double cases[][3] = {{0.3, 0.4, 1.2}, {0.5, 0.7, 2.5}, {1.1, 0.9, 4.0}};
    for (const auto& q : cases) {
        const double a = q[0], b = q[1], c = q[2];
        const double want =
            sf::gamma(c) * sf::gamma(c - a - b) / (sf::gamma(c - a) * sf::gamma(c - b));
        CHECK(rel_err(sf::hyp_pfq_unit({a, b}, {c}), want) < 1e-10);
    }
}

TEST_CASE("hyp_pfq_unit 4F3 against brute-force partial sums") {
    // direct long double partial sums with a Richardson tail estimate
    const std::vector<double> alphas = {1.0, 1.0, 1.5, 1.5};
    const std::vector<double> betas = {2.0, 2.0, 4.0};
    const double d = 3.0; // sum(beta) - sum(alpha)
    const auto partial = [&](long K) {
        long double term = 1.0L, sum = 1.0L;
        for (long k = 0; k < K; ++k) {
            long double f = 1.0L;
            for (double a : alphas) f *= (a + k);
            for (double b : betas) f /= (b + k);
            term *= f / (k + 1.0L);
            sum += term;
        }
        return sum;
    };
    const long double sK = partial(10000);
    const long double s2K = partial(20000);
    const long double w = powl(2.0L, -static_cast<long double>(d));
    const double oracle = static_cast<double>((s2K - w * sK) / (1.0L - w));
    CHECK(rel_err(sf::hyp_pfq_unit(alphas, betas), oracle) < 1e-9);
}

TEST_CASE("hyp_pfq_unit rejects divergent and invalid input") {
    CHECK_THROWS_AS(sf::hyp_pfq_unit({1.0, 2.0, 0.5}, {1.2, 1.1}), numerical_error);
    CHECK_THROWS_AS(sf::hyp_pfq_unit({0.5, 0.5}, {-1.0}), std::domain_error);
    CHECK_THROWS_AS(sf::hyp_pfq_unit({0.5, 0.5, 0.5}, {3.0}), std::domain_error);
}
