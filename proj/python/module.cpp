#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "horadam/bounds.hpp"
#include "horadam/classes.hpp"
#include "horadam/horadam.hpp"
#include "horadam/report.hpp"
#include "horadam/verify.hpp"
#include "horadam/version.hpp"

namespace py = pybind11;
using namespace horadam;

namespace {

std::vector<Complex> functional_coeffs(const ClassSpec& spec, Complex a2, Complex a3,
                                       int order) {
    return functional_series(spec, {a2, a3}, order).coeffs();
}

}  // namespace

PYBIND11_MODULE(horadam, m) {
    m.doc() = "Horadam polynomials, bi-univalent coefficient bounds and Monte-Carlo "
              "certification";
    m.attr("__version__") = kVersion;

    py::class_<HoradamParams>(m, "HoradamParams")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"),
             py::arg("p"), py::arg("q"))
        .def_readwrite("a", &HoradamParams::a)
        .def_readwrite("b", &HoradamParams::b)
        .def_readwrite("p", &HoradamParams::p)
        .def_readwrite("q", &HoradamParams::q)
        .def("__repr__", [](const HoradamParams& hp) {
            return "HoradamParams(a=" + std::to_string(hp.a) + ", b=" + std::to_string(hp.b) +
                   ", p=" + std::to_string(hp.p) + ", q=" + std::to_string(hp.q) + ")";
        });

    py::enum_<PolyFamily>(m, "PolyFamily")
        .value("Fibonacci", PolyFamily::Fibonacci)
        .value("Lucas", PolyFamily::Lucas)
        .value("Pell", PolyFamily::Pell)
        .value("PellLucas", PolyFamily::PellLucas)
        .value("ChebyshevFirst", PolyFamily::ChebyshevFirst)
        .value("ChebyshevSecond", PolyFamily::ChebyshevSecond);

    m.def("family_params", py::overload_cast<PolyFamily>(&family_params), py::arg("family"));
    m.def("horadam_eval", &horadam_eval, py::arg("params"), py::arg("n"), py::arg("x"));
    m.def("horadam_sequence", &horadam_sequence, py::arg("params"), py::arg("n_max"),
          py::arg("x"));
    m.def("gf_coefficients", &gf_coefficients, py::arg("params"), py::arg("x"),
          py::arg("n_max"));
    m.def("chebyshev_u_trig", &chebyshev_u_trig, py::arg("n"), py::arg("phi"));

    py::enum_<ClassKind>(m, "ClassKind")
        .value("SStar", ClassKind::SStar)
        .value("Mocanu", ClassKind::Mocanu)
        .value("AlphaBlend", ClassKind::AlphaBlend);

    py::class_<ClassSpec>(m, "ClassSpec")
        .def(py::init<ClassKind, double, HoradamParams, double>(), py::arg("kind"),
             py::arg("alpha"), py::arg("params"), py::arg("x"))
        .def_readwrite("kind", &ClassSpec::kind)
        .def_readwrite("alpha", &ClassSpec::alpha)
        .def_readwrite("params", &ClassSpec::horadam)
        .def_readwrite("x", &ClassSpec::x);

    py::class_<CoefficientSystem>(m, "CoefficientSystem")
        .def_readonly("c1", &CoefficientSystem::c1)
        .def_readonly("e1", &CoefficientSystem::e1)
        .def_readonly("e2", &CoefficientSystem::e2)
        .def_readonly("f1", &CoefficientSystem::f1)
        .def_readonly("f2", &CoefficientSystem::f2);

    m.def("coefficient_system", &coefficient_system, py::arg("spec"));
    m.def("functional_series", &functional_coeffs, py::arg("spec"), py::arg("a2"),
          py::arg("a3"), py::arg("order") = 8,
          "Taylor coefficients of the class functional of z + a2 z^2 + a3 z^3");
    m.def(
        "inverse_coeffs",
        [](Complex a2, Complex a3) {
            const FunctionCoeffs inv = inverse_coeffs({a2, a3});
            return py::make_tuple(inv.a2, inv.a3);
        },
        py::arg("a2"), py::arg("a3"));

    py::enum_<FsBranch>(m, "FsBranch")
        .value("Inner", FsBranch::Inner)
        .value("Outer", FsBranch::Outer)
        .value("Boundary", FsBranch::Boundary);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("a2_bound", &BoundReport::a2_bound)
        .def_readonly("a3_bound", &BoundReport::a3_bound)
        .def_readonly("fs_bound", &BoundReport::fs_bound)
        .def_readonly("fs_branch", &BoundReport::fs_branch)
        .def_readonly("nu", &BoundReport::nu)
        .def_readonly("denom", &BoundReport::denom)
        .def_readonly("threshold", &BoundReport::threshold)
        .def_readonly("degenerate_h2", &BoundReport::degenerate_h2);

    m.def("denom", &denom, py::arg("spec"));
    m.def("bound_a2", &bound_a2, py::arg("spec"));
    m.def("bound_a3", &bound_a3, py::arg("spec"));
    m.def(
        "fekete_szego",
        [](const ClassSpec& spec, double nu) {
            const auto [bound, branch] = fekete_szego(spec, nu);
            return py::make_tuple(bound, branch);
        },
        py::arg("spec"), py::arg("nu"));
    m.def("bound_report", &bound_report, py::arg("spec"), py::arg("nu"));
    m.def(
        "corollary_bounds",
        [](const std::string& name, const HoradamParams& params, double alpha, double x,
           double nu) {
            const auto corollary = corollary_from_name(name);
            if (!corollary) {
                throw py::value_error("unknown corollary '" + name + "'");
            }
            return corollary_bounds(*corollary, {params, alpha, x, nu});
        },
        py::arg("name"), py::arg("params") = HoradamParams{0, 0, 0, 0}, py::arg("alpha") = 0.0,
        py::arg("x") = 0.0, py::arg("nu") = 1.0);

    m.def(
        "construct_candidate",
        [](const ClassSpec& spec, Complex u1, Complex u2) {
            const Candidate c = construct_candidate(spec, u1, u2);
            return py::make_tuple(c.coeffs.a2, c.coeffs.a3, c.v2);
        },
        py::arg("spec"), py::arg("u1"), py::arg("u2"));
    m.def("roundtrip_check", &roundtrip_check, py::arg("spec"), py::arg("u1"), py::arg("u2"));

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("spec", &VerifyReport::spec)
        .def_readonly("nu_grid", &VerifyReport::nu_grid)
        .def_readonly("trials", &VerifyReport::trials)
        .def_readonly("admissible", &VerifyReport::admissible)
        .def_readonly("violations", &VerifyReport::violations)
        .def_readonly("max_ratio_a2", &VerifyReport::max_ratio_a2)
        .def_readonly("max_ratio_a3", &VerifyReport::max_ratio_a3)
        .def_readonly("max_ratio_fs", &VerifyReport::max_ratio_fs)
        .def_readonly("seed", &VerifyReport::seed)
        .def_readonly("strict_schwarz", &VerifyReport::strict_schwarz)
        .def("to_json", [](const VerifyReport& report) { return verify_to_json(report); });

    m.def("run_verification", &run_verification, py::arg("spec"), py::arg("nu_grid"),
          py::arg("trials"), py::arg("seed") = 1, py::arg("strict_schwarz") = false);
}
