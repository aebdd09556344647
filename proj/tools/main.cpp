// Command-line front end: evaluate expansions, run the reference solver,
// compute eigenvalue bounds, sweep lambda grids to CSV, run verification
// suites.

#include "spiked/errors.hpp"
#include "spiked/expansions.hpp"
#include "spiked/model.hpp"
#include "spiked/reference.hpp"
#include "spiked/trialfn.hpp"
#include "spiked/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

std::string fmt12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct SweepSpec {
    spiked::OscillatorParams base; // lambda ignored
    std::vector<double> lambda_grid;
    int state = 0;
    double tol = 1e-10;

    void validate() const {
        if (lambda_grid.empty()) throw std::domain_error("sweep: empty lambda grid");
        double prev = 0.0;
        for (double l : lambda_grid) {
            if (!(l > prev)) throw std::domain_error("sweep: lambda grid must be strictly increasing and positive");
            if (!(l < 1.0)) throw std::domain_error("sweep: lambda grid values must be < 1");
            prev = l;
        }
    }
};

std::vector<double> parse_grid(const std::string& spec) {
    // "start:stop:count[:log|lin]"
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4) {
        throw std::domain_error("--grid expects start:stop:count[:log|lin]");
    }
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const int count = std::stoi(parts[2]);
    const std::string mode = parts.size() == 4 ? parts[3] : "log";
    if (count < 1 || !(start > 0.0) || (count > 1 && !(stop > start))) {
        throw std::domain_error("--grid requires 0 < start < stop and count >= 1");
    }
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        const double t = count > 1 ? static_cast<double>(i) / (count - 1) : 0.0;
        if (mode == "log") {
            grid[i] = std::exp(std::log(start) + t * (std::log(stop) - std::log(start)));
        } else if (mode == "lin") {
            grid[i] = start + t * (stop - start);
        } else {
            throw std::domain_error("--grid mode must be log or lin");
        }
    }
    return grid;
}

struct SweepRow {
    double lambda = 0.0;
    double e_expansion = 0.0, e_reference = 0.0, e_lower = 0.0, e_upper = 0.0, residual_sq = 0.0;
    spiked::Regime regime = spiked::Regime::UNSUPPORTED;
};

SweepRow compute_row(const SweepSpec& spec, double lambda) {
    spiked::OscillatorParams p = spec.base;
    p.lambda = lambda;
    const auto d = spiked::derive_params(p);
    SweepRow row;
    row.lambda = lambda;
    row.regime = spiked::classify_regime(d);
    const auto e = spec.state == 0 ? spiked::ground_expansion(p)
                                   : spiked::excited_expansion(p, spec.state);
    row.e_expansion = spiked::evaluate_expansion(e, lambda);
    row.e_reference = spiked::solve_reference(p, spec.state).value;
    const auto m = spiked::trial_state_moments(p, spec.state, spec.tol);
    std::optional<double> prev_upper;
    if (spec.state > 0) prev_upper = spiked::gk_energy(spec.state - 1, d.gamma) + 1.0;
    const auto kt = spiked::kato_temple(m.eta, m.residual_sq,
                                        spiked::gk_energy(spec.state + 1, d.gamma) - 0.5,
                                        prev_upper);
    row.e_lower = kt.valid ? kt.lower : std::nan("");
    row.e_upper = kt.valid ? kt.upper : std::nan("");
    row.residual_sq = m.residual_sq;
    return row;
}

int run_sweep(const SweepSpec& spec, const std::string& out_path) {
    spec.validate();
    spec.base.validate();
    const std::size_t n = spec.lambda_grid.size();
    std::vector<SweepRow> rows(n);
    std::vector<std::exception_ptr> errors(n);

    const unsigned workers =
        std::min<unsigned>({4u, std::max(1u, std::thread::hardware_concurrency()),
                            static_cast<unsigned>(n)});
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    rows[i] = compute_row(spec, spec.lambda_grid[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::ostringstream csv;
    csv << "lambda,E_expansion,E_reference,E_lower,E_upper,residual_sq,regime\n";
    for (const auto& r : rows) {
        csv << fmt12(r.lambda) << ',' << fmt12(r.e_expansion) << ',' << fmt12(r.e_reference) << ','
            << fmt12(r.e_lower) << ',' << fmt12(r.e_upper) << ',' << fmt12(r.residual_sq) << ','
            << spiked::to_string(r.regime) << '\n';
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::domain_error("cannot open output file " + out_path);
        f << csv.str();
    }
    return 0;
}

int print_checks(const std::vector<spiked::verify::CheckResult>& checks) {
    int failures = 0;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
        if (!c.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all checks passed" : "some checks FAILED") << " ("
              << checks.size() - failures << "/" << checks.size() << ")\n";
    return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized spiked harmonic oscillator: non-power energy expansions,\n"
                 "finite-difference reference eigenvalues, and two-sided bounds"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config", "",
                   "TOML-style config file with [subcommand] sections; explicit flags win");

    double A = 0.0, alpha = 0.0, lambda = 0.0, tol = 1e-10;
    int state = 0;
    std::string out_path, grid_spec, suite;

    const auto add_common = [&](CLI::App* cmd, bool needs_lambda) {
        cmd->add_option("--A", A, "coupling of the 1/x^2 term (>= 0)")->capture_default_str();
        cmd->add_option("--alpha", alpha, "singularity exponent (> 2)")->required();
        if (needs_lambda) cmd->add_option("--lambda", lambda, "perturbation coupling")->required();
        cmd->add_option("--state", state, "eigenstate index (>= 0)")->capture_default_str();
        cmd->add_option("--tol", tol, "numerical tolerance")->capture_default_str();
    };

    auto* expand = app.add_subcommand("expand", "evaluate the small-coupling expansion");
    add_common(expand, true);
    auto* reference = app.add_subcommand("reference", "finite-difference reference eigenvalue");
    add_common(reference, true);
    auto* bounds = app.add_subcommand("bounds", "two-sided eigenvalue bounds from the trial state");
    add_common(bounds, true);
    auto* sweep = app.add_subcommand("sweep", "CSV table over a lambda grid");
    add_common(sweep, false);
    sweep->add_option("--grid", grid_spec, "lambda grid start:stop:count[:log|lin]")->required();
    sweep->add_option("--out", out_path, "output CSV path (default stdout)");
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "one of: harrell-reductions, lemma6, rs-first-order, "
                                         "alpha52-coefficient, sandwich, lambda2-comparison")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    }

    try {
        if (expand->parsed()) {
            const spiked::OscillatorParams p{A, alpha, lambda};
            p.validate();
            const auto e = state == 0 ? spiked::ground_expansion(p)
                                      : spiked::excited_expansion(p, state);
            std::cout << "regime: " << spiked::to_string(e.regime) << "\n";
            std::cout << "E(lambda) = " << spiked::to_string(e) << "\n";
            std::cout << "value(lambda=" << fmt12(lambda)
                      << ") = " << fmt12(spiked::evaluate_expansion(e, lambda)) << "\n";
        } else if (reference->parsed()) {
            const spiked::OscillatorParams p{A, alpha, lambda};
            p.validate();
            const auto r = spiked::solve_reference(p, state);
            std::cout << "E_ref = " << fmt12(r.value) << " +/- " << fmt12(r.error_estimate)
                      << "  (n=" << r.config_used.n_points
                      << ", levels=" << r.config_used.refinement_levels
                      << ", x_min=" << fmt12(r.config_used.x_min)
                      << ", x_max=" << fmt12(r.config_used.x_max) << ")\n";
        } else if (bounds->parsed()) {
            const spiked::OscillatorParams p{A, alpha, lambda};
            p.validate();
            const auto d = spiked::derive_params(p);
            const auto m = spiked::trial_state_moments(p, state, tol);
            std::optional<double> prev_upper;
            if (state > 0) prev_upper = spiked::gk_energy(state - 1, d.gamma) + 1.0;
            const auto kt = spiked::kato_temple(m.eta, m.residual_sq,
                                                spiked::gk_energy(state + 1, d.gamma) - 0.5,
                                                prev_upper);
            std::cout << "eta         = " << fmt12(m.eta) << "\n";
            std::cout << "residual_sq = " << fmt12(m.residual_sq) << "\n";
            std::cout << "norm_sq     = " << fmt12(m.norm_sq) << "\n";
            if (kt.valid) {
                std::cout << "interval    = [" << fmt12(kt.lower) << ", " << fmt12(kt.upper)
                          << "]\n";
            } else {
                std::cout << "interval    = invalid (gap preconditions failed)\n";
            }
        } else if (sweep->parsed()) {
            SweepSpec spec;
            spec.base = {A, alpha, 0.0};
            spec.lambda_grid = parse_grid(grid_spec);
            spec.state = state;
            spec.tol = tol;
            return run_sweep(spec, out_path);
        } else if (verify->parsed()) {
            return print_checks(spiked::verify::run_suite(suite));
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
