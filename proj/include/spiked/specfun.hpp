#pragma once

#include <vector>

namespace spiked::sf {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334114518;
inline constexpr double euler_constant = 0.57721566490153286060651209008240243;

/// Gamma function for real x (x not a nonpositive integer).
/// At least 12 significant digits for |x| <= 50.
double gamma(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma(double x);

/// Digamma function for x > 0.
double digamma(double x);

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
/// For a = -m a nonpositive integer, (a)_n = 0 once n > m.
double pochhammer(double a, int n);

/// Modified Bessel function of the first kind, ascending series, real order.
double bessel_i(double order, double z);

/// Modified Bessel function of the second kind, real order, z > 0.
/// Symmetric in the order; continuous across integer orders.
double bessel_k(double order, double z);

/// Confluent hypergeometric 1F1(a; b; z); terminates exactly when a is a
/// nonpositive integer.
double hyp1f1(double a, double b, double z);

/// Gauss hypergeometric 2F1(a, b; c; z) for |z| < 1, z = 1 with
/// c - a - b > 0, or a/b a nonpositive integer (terminating).
double hyp2f1(double a, double b, double c, double z);

/// Generalized hypergeometric pFq at unit argument with p = q + 1.
/// Terminating sums are evaluated exactly; otherwise requires
/// sum(betas) - sum(alphas) > 0 and accelerates the tail.
double hyp_pfq_unit(const std::vector<double>& alphas, const std::vector<double>& betas);

} // namespace spiked::sf
