#include "spiked/reference.hpp"

#include "spiked/errors.hpp"
#include "spiked/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace spiked {

void SolverConfig::validate() const {
    if (!(x_min > 0.0) || !(x_max > x_min)) {
        throw std::domain_error("SolverConfig: requires 0 < x_min < x_max");
    }
    if (n_points < 100) throw std::domain_error("SolverConfig: requires n_points >= 100");
    if (refinement_levels < 1 || refinement_levels > 8) {
        throw std::domain_error("SolverConfig: refinement_levels must be in [1, 8]");
    }
}

SolverConfig auto_config(const OscillatorParams& p, int state) {
    p.validate();
    if (state < 0) throw std::domain_error("auto_config: requires state >= 0");
    const DerivedParams d = derive_params(p);
    SolverConfig cfg;
    cfg.x_max = std::sqrt(gk_energy(state, d.gamma) + 30.0) + 4.0;
    if (p.lambda > 0.0) {
        // inner cutoff where the barrier suppression exponent reaches 30
        cfg.x_min = std::pow(2.0 * d.nu * std::sqrt(p.lambda) / 30.0, 2.0 * d.nu);
        if (!(cfg.x_min > 1e-280)) cfg.x_min = 1e-280;
        const double fallback = 1e-3 * std::pow(p.lambda, d.nu);
        if (!std::isfinite(cfg.x_min) || cfg.x_min >= 0.5 * cfg.x_max) cfg.x_min = fallback;
    } else {
        // without a barrier the Dirichlet wall shifts the eigenvalue by about
        // psi'(0)^2 x_min^{2 gamma - 2}; keep that below the Richardson floor
        const double eps_based =
            std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (d.gamma + 0.5));
        const double wall_based =
            std::pow(5e-14 * spiked::sf::gamma(d.gamma), 1.0 / (2.0 * d.gamma - 2.0));
        cfg.x_min = std::min(eps_based, wall_based);
    }
    const double range = std::log(cfg.x_max / cfg.x_min);
    const double h = 0.75 * std::min(0.002, d.nu / 10.0);
    cfg.n_points = static_cast<int>(std::clamp(std::ceil(range / h), 12000.0, 2000000.0));
    cfg.refinement_levels = 3;
    return cfg;
}

namespace {

// Eigenvalues of the Liouville-transformed pencil on u = log x:
//   -w'' + [x^2 V(x) + 1/4] w = E x^2 w,   x = e^u,
// which keeps the three-point stencil symmetric and makes both the
// centrifugal term and the barrier smooth on a uniform u-grid.
class LogMeshPencil {
  public:
    LogMeshPencil(const OscillatorParams& p, double u0, double u1, int n) : n_(n), q_(n), b_(n) {
        h_ = (u1 - u0) / (n + 1.0);
        inv_h2_ = 1.0L / (static_cast<long double>(h_) * h_);
        for (int i = 0; i < n; ++i) {
            const double x = std::exp(u0 + (i + 1) * h_);
            const double x2 = x * x;
            // x^2 * (x^2 + A/x^2 + lambda x^-alpha) + 1/4
            q_[i] = x2 * x2 + p.A + p.lambda * std::pow(x, 2.0 - p.alpha) + 0.25;
            b_[i] = x2;
        }
    }

    // Sturm count: eigenvalues of the pencil below sigma.
    int count_below(long double sigma) const {
        const long double c2 = inv_h2_ * inv_h2_;
        int count = 0;
        long double piv = 1.0L;
        for (int i = 0; i < n_; ++i) {
            long double v = 2.0L * inv_h2_ + q_[i] - sigma * b_[i];
            if (i > 0) v -= c2 / piv;
            if (v == 0.0L) v = -1e-300L;
            if (v < 0.0L) ++count;
            piv = v;
        }
        return count;
    }

    double eigenvalue(int index) const {
        long double lo = 0.0L;
        long double hi = 16.0L + 8.0L * index;
        int guard = 0;
        while (count_below(hi) <= index) {
            hi *= 2.0L;
            if (++guard > 60) throw numerical_error("solve_reference: eigenvalue bracket failed");
        }
        for (int it = 0; it < 200; ++it) {
            const long double mid = 0.5L * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (count_below(mid) > index) {
                hi = mid;
            } else {
                lo = mid;
            }
            if (hi - lo <= 1e-15L * std::max<long double>(1.0L, hi)) break;
        }
        return static_cast<double>(0.5L * (lo + hi));
    }

  private:
    int n_;
    double h_ = 0.0;
    long double inv_h2_ = 0.0L;
    std::vector<long double> q_, b_;
};

} // namespace

EnergyEstimate solve_reference(const OscillatorParams& p, int state, const SolverConfig& cfg) {
    p.validate();
    if (state < 0) throw std::domain_error("solve_reference: requires state >= 0");
    cfg.validate();
    const DerivedParams d = derive_params(p);
    if (cfg.x_max < std::sqrt(gk_energy(state, d.gamma)) + 2.0) {
        throw std::domain_error("solve_reference: x_max inside the oscillator turning region");
    }
    if (p.lambda > 0.0) {
        const double exponent = 2.0 * d.nu * std::sqrt(p.lambda) * std::pow(cfg.x_min, -0.5 / d.nu);
        if (exponent < 12.0) {
            throw std::domain_error("solve_reference: x_min too large for the barrier suppression");
        }
    } else if (std::pow(cfg.x_min, d.gamma - 0.5) > 1e-3) {
        throw std::domain_error("solve_reference: x_min too large for the origin behavior");
    }

    const double u0 = std::log(cfg.x_min);
    const double u1 = std::log(cfg.x_max);
    const int levels = cfg.refinement_levels;
    std::vector<long double> row; // Richardson table, current row
    std::vector<long double> prev;
    long double last_extrap = 0.0L, prev_extrap = 0.0L;
    for (int l = 0; l < levels; ++l) {
        const int n = cfg.n_points << l;
        LogMeshPencil pencil(p, u0, u1, n);
        prev = row;
        row.assign(1, pencil.eigenvalue(state));
        for (int k = 1; k <= l; ++k) {
            const long double pw = std::pow(4.0L, k);
            row.push_back(row[k - 1] + (row[k - 1] - prev[k - 1]) / (pw - 1.0L));
        }
        prev_extrap = last_extrap;
        last_extrap = row.back();
    }
    EnergyEstimate est;
    est.value = static_cast<double>(last_extrap);
    est.error_estimate =
        levels > 1 ? static_cast<double>(std::abs(last_extrap - prev_extrap)) : 1e-3;
    if (p.lambda == 0.0) {
        // Dirichlet wall contribution, invisible to Richardson refinement
        est.error_estimate += 2.0 / spiked::sf::gamma(d.gamma) *
                              std::pow(cfg.x_min, 2.0 * d.gamma - 2.0);
    }
    est.config_used = cfg;
    if (levels > 1 && est.error_estimate > std::max(0.01 * std::abs(est.value), 0.05)) {
        throw numerical_error("solve_reference: refinement levels disagree; grid not converged");
    }
    return est;
}

EnergyEstimate solve_reference(const OscillatorParams& p, int state) {
    return solve_reference(p, state, auto_config(p, state));
}

KTInterval kato_temple(double eta, double residual_sq, std::optional<double> next_lower,
                       std::optional<double> prev_upper) {
    if (!std::isfinite(eta)) throw std::domain_error("kato_temple: eta must be finite");
    if (!(residual_sq >= 0.0)) throw std::domain_error("kato_temple: requires residual_sq >= 0");
    KTInterval kt;
    if (!next_lower || !(eta < *next_lower)) return kt;
    if (prev_upper) {
        if (!(*prev_upper < eta)) return kt;
        if (!(residual_sq < (*next_lower - eta) * (eta - *prev_upper))) return kt;
    }
    kt.lower = eta - residual_sq / (*next_lower - eta);
    kt.upper = prev_upper ? eta + residual_sq / (eta - *prev_upper) : eta;
    kt.valid = true;
    return kt;
}

} // namespace spiked
