#include "spiked/errors.hpp"
#include "spiked/expansions.hpp"
#include "spiked/model.hpp"
#include "spiked/quadrature.hpp"
#include "spiked/reference.hpp"
#include "spiked/specfun.hpp"
#include "spiked/trialfn.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spiked;

PYBIND11_MODULE(spikedho, m) {
    m.doc() = "Generalized spiked harmonic oscillator: non-power perturbation expansions, "
              "special functions, a finite-difference reference eigensolver and "
              "Kato-Temple eigenvalue bounds.";

    py::register_exception<numerical_error>(m, "NumericalError", PyExc_ArithmeticError);

    // special functions
    m.attr("euler_constant") = sf::euler_constant;
    m.def("gamma", &sf::gamma, py::arg("x"));
    m.def("log_gamma", &sf::log_gamma, py::arg("x"));
    m.def("digamma", &sf::digamma, py::arg("x"));
    m.def("pochhammer", &sf::pochhammer, py::arg("a"), py::arg("n"));
    m.def("bessel_i", &sf::bessel_i, py::arg("order"), py::arg("z"));
    m.def("bessel_k", &sf::bessel_k, py::arg("order"), py::arg("z"));
    m.def("hyp1f1", &sf::hyp1f1, py::arg("a"), py::arg("b"), py::arg("z"));
    m.def("hyp2f1", &sf::hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("hyp_pfq_unit", &sf::hyp_pfq_unit, py::arg("alphas"), py::arg("betas"));

    // model ('lambda' is a python keyword, so the coupling binds as 'lam')
    py::class_<OscillatorParams>(m, "OscillatorParams")
        .def(py::init([](double A, double alpha, double lam) {
                 return OscillatorParams{A, alpha, lam};
             }),
             py::arg("A"), py::arg("alpha"), py::arg("lam"))
        .def_readwrite("A", &OscillatorParams::A)
        .def_readwrite("alpha", &OscillatorParams::alpha)
        .def_readwrite("lam", &OscillatorParams::lambda)
        .def("validate", &OscillatorParams::validate)
        .def("__repr__", [](const OscillatorParams& p) {
            return "OscillatorParams(A=" + std::to_string(p.A) +
                   ", alpha=" + std::to_string(p.alpha) + ", lam=" + std::to_string(p.lambda) + ")";
        });

    py::class_<DerivedParams>(m, "DerivedParams")
        .def_readonly("gamma", &DerivedParams::gamma)
        .def_readonly("nu", &DerivedParams::nu)
        .def_readonly("s", &DerivedParams::s);

    py::enum_<Regime>(m, "Regime")
        .value("RS_FULL", Regime::RS_FULL)
        .value("S_IN_0_HALF", Regime::S_IN_0_HALF)
        .value("S_IN_HALF_1", Regime::S_IN_HALF_1)
        .value("S_EQ_1", Regime::S_EQ_1)
        .value("S_IN_1_2", Regime::S_IN_1_2)
        .value("S_EQ_2", Regime::S_EQ_2)
        .value("S_IN_2_3", Regime::S_IN_2_3)
        .value("S_IN_3_4", Regime::S_IN_3_4)
        .value("UNSUPPORTED", Regime::UNSUPPORTED);

    m.def("derive_params", &derive_params, py::arg("params"));
    m.def("classify_regime", &classify_regime, py::arg("derived"), py::arg("tol") = 1e-9);
    m.def("gk_energy", &gk_energy, py::arg("n"), py::arg("gamma"));
    m.def("gk_wavefunction", &gk_wavefunction, py::arg("n"), py::arg("gamma"), py::arg("x"));

    // expansions
    py::class_<ExpansionTerm>(m, "ExpansionTerm")
        .def_readonly("coeff", &ExpansionTerm::coeff)
        .def_readonly("lambda_power", &ExpansionTerm::lambda_power)
        .def_readonly("log_power", &ExpansionTerm::log_power);

    py::class_<EnergyExpansion>(m, "EnergyExpansion")
        .def_readonly("terms", &EnergyExpansion::terms)
        .def_readonly("error_lambda_power", &EnergyExpansion::error_lambda_power)
        .def_readonly("error_log_power", &EnergyExpansion::error_log_power)
        .def_readonly("regime", &EnergyExpansion::regime)
        .def("__call__", &evaluate_expansion, py::arg("lam"))
        .def("__str__", [](const EnergyExpansion& e) { return to_string(e); });

    m.def("rs_series", &rs_series, py::arg("params"), py::arg("order"));
    m.def("ground_expansion", &ground_expansion, py::arg("params"));
    m.def("excited_expansion", &excited_expansion, py::arg("params"), py::arg("i"));
    m.def("evaluate_expansion", &evaluate_expansion, py::arg("expansion"), py::arg("lam"));
    m.def("laplace_1f1_product", &laplace_1f1_product, py::arg("d"), py::arg("s"), py::arg("a"),
          py::arg("b"), py::arg("k"), py::arg("a2"), py::arg("b2"), py::arg("k2"));

    // quadrature
    py::class_<QuadResult>(m, "QuadResult")
        .def_readonly("value", &QuadResult::value)
        .def_readonly("error_estimate", &QuadResult::error_estimate)
        .def_readonly("evaluations", &QuadResult::evaluations);

    m.def("integrate_semi_infinite", &integrate_semi_infinite, py::arg("f"),
          py::arg("split") = 1.0, py::arg("tol") = 1e-10, py::arg("budget") = 4000000);

    // trial state
    py::class_<TrialMoments>(m, "TrialMoments")
        .def_readonly("norm_sq", &TrialMoments::norm_sq)
        .def_readonly("eta", &TrialMoments::eta)
        .def_readonly("residual_sq", &TrialMoments::residual_sq)
        .def_readonly("quad_error", &TrialMoments::quad_error);

    m.def("w_alpha", &w_alpha, py::arg("x"), py::arg("params"));
    m.def("dw_alpha", &dw_alpha, py::arg("x"), py::arg("params"));
    m.def("trial_state_moments", &trial_state_moments, py::arg("params"), py::arg("i"),
          py::arg("tol") = 1e-10);

    // reference solver and bounds
    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init([](double x_min, double x_max, int n_points, int levels) {
                 return SolverConfig{x_min, x_max, n_points, levels};
             }),
             py::arg("x_min"), py::arg("x_max"), py::arg("n_points"),
             py::arg("refinement_levels") = 3)
        .def_readwrite("x_min", &SolverConfig::x_min)
        .def_readwrite("x_max", &SolverConfig::x_max)
        .def_readwrite("n_points", &SolverConfig::n_points)
        .def_readwrite("refinement_levels", &SolverConfig::refinement_levels);

    m.def("auto_config", &auto_config, py::arg("params"), py::arg("state"));

    py::class_<EnergyEstimate>(m, "EnergyEstimate")
        .def_readonly("value", &EnergyEstimate::value)
        .def_readonly("error_estimate", &EnergyEstimate::error_estimate)
        .def_readonly("config_used", &EnergyEstimate::config_used);

    m.def("solve_reference",
          py::overload_cast<const OscillatorParams&, int, const SolverConfig&>(&solve_reference),
          py::arg("params"), py::arg("state"), py::arg("config"));
    m.def("solve_reference", py::overload_cast<const OscillatorParams&, int>(&solve_reference),
          py::arg("params"), py::arg("state"));

    py::class_<KTInterval>(m, "KTInterval")
        .def_readonly("lower", &KTInterval::lower)
        .def_readonly("upper", &KTInterval::upper)
        .def_readonly("valid", &KTInterval::valid);

    m.def("kato_temple", &kato_temple, py::arg("eta"), py::arg("residual_sq"),
          py::arg("next_lower") = py::none(), py::arg("prev_upper") = py::none());
}
