#include "spiked/quadrature.hpp"

#include "spiked/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace spiked {

namespace {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1].
constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct Segment {
    double a, b, value, error;
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double fc = f(mid);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = hw * xgk[i];
        const double fsum = f(mid + dx) + f(mid - dx);
        resk += wgk[i] * fsum;
        if (i % 2 == 1) resg += wg[i / 2] * fsum;
    }
    resk *= hw;
    resg *= hw;
    double err = std::abs(resk - resg);
    const double scaled = std::pow(200.0 * err, 1.5);
    if (scaled < err) err = scaled;
    err = std::max(err, 5e-16 * std::abs(resk));
    return {a, b, resk, err};
}

QuadResult adaptive_core(const std::function<double(double)>& f, double a, double b, double tol,
                         long budget, long& used) {
    const auto by_error = [](const Segment& x, const Segment& y) { return x.error < y.error; };
    std::priority_queue<Segment, std::vector<Segment>, decltype(by_error)> segs(by_error);
    Segment first = gk15(f, a, b);
    used += 15;
    double total = first.value, err = first.error;
    segs.push(first);
    const double min_width = 1e-14 * (std::abs(a) + std::abs(b) + 1.0);
    for (;;) {
        // tol acts both as relative target and absolute floor
        if (err <= std::max(tol * std::abs(total), tol)) return {total, err, used};
        const Segment s = segs.top();
        if (s.b - s.a < min_width) return {total, err, used};
        if (used + 30 > budget) {
            throw quadrature_error("integration budget exceeded", total, err, used);
        }
        segs.pop();
        const double mid = 0.5 * (s.a + s.b);
        const Segment left = gk15(f, s.a, mid);
        const Segment right = gk15(f, mid, s.b);
        used += 30;
        total += left.value + right.value - s.value;
        err += left.error + right.error - s.error;
        segs.push(left);
        segs.push(right);
    }
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol, long budget) {
    if (!(tol > 0.0)) throw std::domain_error("integrate_adaptive: requires tol > 0");
    long used = 0;
    return adaptive_core(f, a, b, tol, budget, used);
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f, double split,
                                   double tol, long budget) {
    if (!(split > 0.0)) throw std::domain_error("integrate_semi_infinite: requires split > 0");
    if (!(tol > 0.0)) throw std::domain_error("integrate_semi_infinite: requires tol > 0");

    long used = 0;
    double value = 0.0, error = 0.0;
    const auto run_block = [&](auto&& g, double a, double b) {
        QuadResult r;
        try {
            r = adaptive_core(g, a, b, 0.25 * tol, budget - used, used);
        } catch (const quadrature_error& e) {
            throw quadrature_error("integrate_semi_infinite: budget exceeded",
                                   value + e.partial_value, error + e.error_estimate, used);
        }
        value += r.value;
        error += r.error_estimate;
        return std::abs(r.value);
    };

    // (0, split]: x = e^u blocks walking toward the origin.
    const auto g = [&f](double u) {
        const double x = std::exp(u);
        return f(x) * x;
    };
    const double u_hi = std::log(split);
    const double block_width = 3.0;
    int tiny_blocks = 0;
    for (int j = 0; j < 200; ++j) {
        const double b = u_hi - j * block_width;
        const double a = b - block_width;
        const double contribution = run_block(g, a, b);
        if (contribution <= 0.1 * std::max(tol * std::abs(value), tol)) {
            if (++tiny_blocks >= 2) break;
        } else {
            tiny_blocks = 0;
        }
        if (a < -700.0) break;
    }

    // [split, inf): a main block, then geometric extension blocks.
    double hi = std::max({2.0 * split, 8.0, std::sqrt(-std::log(std::min(tol, 0.1))) + 4.0});
    run_block(f, split, hi);
    tiny_blocks = 0;
    for (int j = 0; j < 90; ++j) {
        const double next = 1.6 * hi;
        const double contribution = run_block(f, hi, next);
        hi = next;
        if (contribution <= 0.1 * std::max(tol * std::abs(value), tol)) {
            if (++tiny_blocks >= 2) break;
        } else {
            tiny_blocks = 0;
        }
        if (hi > 1e12) break;
    }
    return {value, error, used};
}

} // namespace spiked
