#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revival/biortho.hpp"
#include "revival/diagnostics.hpp"
#include "revival/evolution.hpp"
#include "revival/mathieu.hpp"
#include "revival/potential.hpp"
#include "revival/spectral.hpp"
#include "revival/superposition.hpp"
#include "revival/validation.hpp"

namespace py = pybind11;
using namespace revival;

namespace {

GridFunction grid_from_array(py::array_t<Complex, py::array::c_style | py::array::forcecast> values) {
    if (values.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
    const auto n = static_cast<std::size_t>(values.shape(0));
    if (n < 3) throw std::invalid_argument("need at least 3 nodes");
    std::vector<Complex> v(values.data(), values.data() + n);
    return GridFunction(n - 1, std::move(v));
}

py::array_t<Complex> grid_to_array(const GridFunction& g) {
    py::array_t<Complex> out(static_cast<py::ssize_t>(g.size()));
    std::copy(g.values().begin(), g.values().end(), out.mutable_data());
    return out;
}

py::array_t<double> nodes_array(const GridFunction& g) {
    py::array_t<double> out(static_cast<py::ssize_t>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) out.mutable_data()[i] = g.node(i);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "weak revivals of the linear Schrodinger equation on (0,pi): "
              "non-self-adjoint spectra, bi-orthogonal expansions and the "
              "Gauss-sum revival decomposition at rational times";

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init(&grid_from_array), py::arg("values"),
             "complex samples on the uniform grid of [0,pi] (M+1 nodes, M even)")
        .def_static(
            "zeros", [](std::size_t m) { return GridFunction(m); }, py::arg("intervals"))
        .def_property_readonly("intervals", &GridFunction::intervals)
        .def_property_readonly("values", &grid_to_array)
        .def_property_readonly("nodes", &nodes_array)
        .def("value_at", &GridFunction::value_at, py::arg("x"))
        .def("l2_norm", &GridFunction::l2_norm)
        .def("sup_norm", &GridFunction::sup_norm)
        .def("max_adjacent_jump", &GridFunction::max_adjacent_jump)
        .def(
            "__add__",
            [](const GridFunction& a, const GridFunction& b) { return a + b; },
            py::is_operator())
        .def(
            "__sub__",
            [](const GridFunction& a, const GridFunction& b) { return a - b; },
            py::is_operator())
        .def(
            "__mul__", [](const GridFunction& a, Complex s) { return s * a; },
            py::is_operator())
        .def(
            "__rmul__", [](const GridFunction& a, Complex s) { return s * a; },
            py::is_operator())
        .def("__len__", &GridFunction::size);

    m.def("sine_basis", &sine_basis, py::arg("index"), py::arg("intervals"));
    m.def("make_indicator", &make_indicator, py::arg("a"), py::arg("b"),
          py::arg("intervals"));
    m.def("make_poly", &make_poly, py::arg("intervals"));
    m.def("indicator_sine_coefficients", &indicator_sine_coefficients, py::arg("a"),
          py::arg("b"), py::arg("modes"));
    m.def("inner_product", &inner_product, py::arg("f"), py::arg("g"));
    m.def("l2_distance", &l2_distance, py::arg("f"), py::arg("g"));

    py::class_<Potential>(m, "Potential")
        .def_static("mathieu", &Potential::mathieu, py::arg("qcoef"),
                    py::arg("quadrature_intervals") = 4096,
                    "V(x) = 2 q cos(2x)")
        .def_static("fourier", &Potential::fourier, py::arg("cos_coeffs"),
                    py::arg("sin_coeffs") = std::vector<Complex>{},
                    py::arg("quadrature_intervals") = 4096)
        .def_static("samples", &Potential::samples, py::arg("values"))
        .def("evaluate", &Potential::evaluate, py::arg("x"))
        .def_property_readonly("mean", &Potential::mean)
        .def_property_readonly("sup_norm", &Potential::sup_norm)
        .def("antiderivative", &Potential::antiderivative, py::arg("x"))
        .def("second_order_term", &Potential::second_order_term, py::arg("x"))
        .def("mean_centered", &Potential::mean_centered)
        .def("conjugated", &Potential::conjugated)
        .def("shifted", &Potential::shifted, py::arg("c"));

    py::class_<EigenPair>(m, "EigenPair")
        .def_readonly("index", &EigenPair::index)
        .def_readonly("omega", &EigenPair::omega)
        .def_readonly("lambda_", &EigenPair::lambda)
        .def_readonly("deviation", &EigenPair::deviation)
        .def_readonly("eigenfunction", &EigenPair::eigenfunction)
        .def_readonly("residual", &EigenPair::residual);

    py::class_<ShootResult>(m, "ShootResult")
        .def_readonly("trajectory", &ShootResult::trajectory)
        .def_readonly("endpoint", &ShootResult::endpoint);

    py::class_<EigenSweep>(m, "EigenSweep")
        .def_readonly("pairs", &EigenSweep::pairs)
        .def_readonly("norm_bound_warning", &EigenSweep::norm_bound_warning);

    m.def("shoot", &shoot, py::arg("potential"), py::arg("lambda_"), py::arg("intervals"));
    m.def("find_eigenvalue", &find_eigenvalue, py::arg("potential"), py::arg("index"),
          py::arg("intervals"), py::arg("tol") = 1e-10, py::arg("max_iterations") = 50,
          py::call_guard<py::gil_scoped_release>());
    m.def("asymptotic_eigenfunction", &asymptotic_eigenfunction, py::arg("potential"),
          py::arg("index"), py::arg("intervals"));
    m.def("eigen_sweep", &eigen_sweep, py::arg("potential"), py::arg("count"),
          py::arg("intervals"), py::arg("jobs") = 0, py::arg("tol") = 1e-10,
          py::call_guard<py::gil_scoped_release>());

    py::class_<BiorthogonalPair>(m, "BiorthogonalPair")
        .def_readonly("index", &BiorthogonalPair::index)
        .def_readonly("phi", &BiorthogonalPair::phi)
        .def_readonly("phi_star", &BiorthogonalPair::phi_star)
        .def_readonly("gamma", &BiorthogonalPair::gamma);

    py::class_<BiorthogonalSystem>(m, "BiorthogonalSystem")
        .def_readonly("pairs", &BiorthogonalSystem::pairs)
        .def_readonly("gram_defect", &BiorthogonalSystem::gram_defect)
        .def_readonly("intervals", &BiorthogonalSystem::intervals)
        .def_property_readonly("modes", &BiorthogonalSystem::modes);

    m.def("assemble_biorthogonal", &assemble_biorthogonal, py::arg("direct"),
          py::arg("adjoint"));
    m.def("build_system", &build_system, py::arg("potential"), py::arg("modes"),
          py::arg("intervals"), py::arg("jobs") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("expand", &expand, py::arg("system"), py::arg("f"));

    py::class_<RationalTime>(m, "RationalTime")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("p"), py::arg("q"))
        .def_readonly("p", &RationalTime::p)
        .def_readonly("q", &RationalTime::q)
        .def_property_readonly("seconds", &RationalTime::seconds);

    m.def("odd_periodic_extension", &odd_periodic_extension, py::arg("f"), py::arg("x"));
    m.def(
        "gauss_indicator",
        [](std::int64_t mm, std::int64_t j, std::int64_t q) {
            const auto g = gauss_indicator(mm, j, q);
            return py::make_tuple(g.value, g.rounding_error);
        },
        py::arg("m"), py::arg("j"), py::arg("q"),
        "returns (value, pre-rounding error)");
    m.def("mean_phase", &mean_phase, py::arg("mean_potential"), py::arg("t"));
    m.def("revival_superposition", &revival_superposition, py::arg("f"), py::arg("t"),
          py::arg("mean_potential") = Complex{0.0, 0.0});

    m.def("sine_coefficients", &sine_coefficients, py::arg("f"), py::arg("modes"));
    m.def("sine_truncation", &sine_truncation, py::arg("f"), py::arg("modes"));
    m.def("evolve", &evolve, py::arg("system"), py::arg("pairs"), py::arg("f"),
          py::arg("t"));
    m.def(
        "free_evolution",
        [](const GridFunction& f, double t, int modes) {
            return free_evolution(f, t, modes);
        },
        py::arg("f"), py::arg("t"), py::arg("modes"));
    m.def(
        "free_evolution",
        [](const GridFunction& f, const RationalTime& t, int modes) {
            return free_evolution(f, t, modes);
        },
        py::arg("f"), py::arg("t"), py::arg("modes"),
        "rational-time overload with exact integer-square phases");
    m.def("free_evolution_from_coeffs", &free_evolution_from_coeffs, py::arg("coeffs"),
          py::arg("t"), py::arg("intervals"));

    py::class_<RevivalDecomposition>(m, "RevivalDecomposition")
        .def_readonly("time", &RevivalDecomposition::time)
        .def_readonly("solution", &RevivalDecomposition::solution)
        .def_readonly("revival_part", &RevivalDecomposition::revival_part)
        .def_readonly("correction", &RevivalDecomposition::correction)
        .def_readonly("modes", &RevivalDecomposition::modes);

    m.def("decompose_at_rational_time", &decompose_at_rational_time, py::arg("potential"),
          py::arg("system"), py::arg("pairs"), py::arg("f"), py::arg("t"));

    py::class_<MathieuSpectrum>(m, "MathieuSpectrum")
        .def_readonly("qcoef", &MathieuSpectrum::qcoef)
        .def_readonly("values", &MathieuSpectrum::values)
        .def_readonly("truncation", &MathieuSpectrum::truncation);

    m.def("characteristic_values", &characteristic_values, py::arg("qcoef"),
          py::arg("count"), py::arg("truncation") = 0);
    m.def("se_function", &se_function, py::arg("qcoef"), py::arg("index"), py::arg("x"),
          py::arg("truncation") = 0);
    m.def("se_function_grid", &se_function_grid, py::arg("qcoef"), py::arg("index"),
          py::arg("intervals"), py::arg("truncation") = 0);

    py::class_<ContinuityReport>(m, "ContinuityReport")
        .def_readonly("max_jump", &ContinuityReport::max_jump)
        .def_readonly("refinement_ratio", &ContinuityReport::refinement_ratio)
        .def_readonly("l2_norm", &ContinuityReport::l2_norm)
        .def_readonly("sup_norm", &ContinuityReport::sup_norm);

    m.def("max_jump_outside", &max_jump_outside, py::arg("field"),
          py::arg("excluded") = std::vector<Interval>{});
    m.def("continuity_report", &continuity_report, py::arg("field"),
          py::arg("field_refined"), py::arg("excluded") = std::vector<Interval>{});
    m.def("shifted_jump_locations", &shifted_jump_locations, py::arg("datum_jumps"),
          py::arg("q"));
    m.def("gibbs_exclusion_zones", &gibbs_exclusion_zones, py::arg("jump_locations"),
          py::arg("modes"));
    m.def("jump_ratio", &jump_ratio, py::arg("decomposition"), py::arg("datum_jumps"));

    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("id", &CriterionResult::id)
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("passed", &CriterionResult::passed)
        .def_readonly("advisory", &CriterionResult::advisory)
        .def_readonly("detail", &CriterionResult::detail)
        .def_readonly("seconds", &CriterionResult::seconds);

    m.def("run_suite", &run_suite, py::arg("suite"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_all_criteria", &run_all_criteria,
          py::call_guard<py::gil_scoped_release>());

    py::register_exception<ShootError>(m, "ShootError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<MisindexError>(m, "MisindexError", PyExc_RuntimeError);
    py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_RuntimeError);
    py::register_exception<IndexCollisionError>(m, "IndexCollisionError",
                                                PyExc_RuntimeError);

#ifdef REVIVAL_VERSION
    m.attr("__version__") = REVIVAL_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
