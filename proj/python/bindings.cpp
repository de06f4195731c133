#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wignerab/analysis.hpp"
#include "wignerab/analytic.hpp"
#include "wignerab/errors.hpp"
#include "wignerab/numeric.hpp"

namespace py = pybind11;
using namespace wignerab;

namespace {

py::array_t<double> to_array(const WignerField& field)
{
    const std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(field.nx()), static_cast<py::ssize_t>(field.np())};
    return py::array_t<double>(shape, field.values().data());
}

py::array_t<double> to_array(const std::vector<double>& values)
{
    const std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(values.size())};
    return py::array_t<double>(shape, values.data());
}

WignerField from_array(const Grid2D& grid, const py::array_t<double, py::array::c_style | py::array::forcecast>& a)
{
    if (a.ndim() != 2) {
        throw InvalidInput("field array must be 2-D");
    }
    return WignerField(grid, std::vector<double>(a.data(), a.data() + a.size()));
}

MarginalCurve curve(Axis axis, const Grid1D& grid, const std::vector<double>& values)
{
    return MarginalCurve(axis, grid, values);
}

} // namespace

PYBIND11_MODULE(_wignerab, m)
{
    m.doc() = "Two-slit Wigner functions with an Aharonov-Bohm phase";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
    py::register_exception<ConventionError>(m, "ConventionError", base.ptr());
    py::register_exception<AnalysisError>(m, "AnalysisError", base.ptr());

    py::enum_<Axis>(m, "Axis").value("position", Axis::position).value("momentum", Axis::momentum);
    py::enum_<analytic::Slit>(m, "Slit").value("upper", analytic::Slit::upper).value("lower", analytic::Slit::lower);

    py::class_<SlitPairParams>(m, "SlitPairParams")
        .def(py::init([](double x0, double d, double delta, double hbar, double alpha) {
                 SlitPairParams p{x0, d, delta, hbar, alpha};
                 validate(p);
                 return p;
             }),
             py::arg("x0") = 1.0, py::arg("d") = 5.0, py::arg("delta") = 0.0, py::arg("hbar") = 1.0,
             py::arg("alpha") = 0.0)
        .def_readwrite("x0", &SlitPairParams::x0)
        .def_readwrite("d", &SlitPairParams::d)
        .def_readwrite("delta", &SlitPairParams::delta)
        .def_readwrite("hbar", &SlitPairParams::hbar)
        .def_readwrite("alpha", &SlitPairParams::alpha);

    py::class_<Grid1D>(m, "Grid1D")
        .def(py::init<double, double, std::size_t>(), py::arg("min"), py::arg("max"), py::arg("n"))
        .def_property_readonly("min", &Grid1D::min)
        .def_property_readonly("max", &Grid1D::max)
        .def_property_readonly("spacing", &Grid1D::spacing)
        .def("__len__", &Grid1D::size)
        .def("points", [](const Grid1D& g) { return to_array(g.points()); });

    py::class_<Grid2D>(m, "Grid2D")
        .def(py::init<Grid1D, Grid1D>(), py::arg("x_axis"), py::arg("p_axis"))
        .def_readonly("x_axis", &Grid2D::x_axis)
        .def_readonly("p_axis", &Grid2D::p_axis);

    m.def("normalized_params", &normalized_params, py::arg("alpha") = 0.0, py::arg("delta") = 0.0);
    m.def("delta_big", &delta_big);
    m.def("delta_from_flux", [](double phi, double phi0) { return analytic::delta_from_flux({phi, phi0}); },
          py::arg("phi"), py::arg("phi0"));

    m.def("wdf", &analytic::wdf_propagated_closed_form, py::arg("params"), py::arg("x"), py::arg("p"));
    m.def("p_marginal", &analytic::p_marginal_closed_form, py::arg("params"), py::arg("p"));
    m.def("x_marginal", &analytic::x_marginal_propagated_closed_form, py::arg("params"), py::arg("x"));

    m.def("sample_wdf", [](const SlitPairParams& p, const Grid2D& g) { return to_array(analytic::sample_wdf(p, g)); });
    m.def("sample_slit_wdf", [](const SlitPairParams& p, analytic::Slit s, const Grid2D& g) {
        return to_array(analytic::sample_slit_wdf(p, s, g));
    });
    m.def("sample_x_marginal",
          [](const SlitPairParams& p, const Grid1D& g) { return to_array(analytic::sample_x_marginal(p, g).values); });
    m.def("sample_p_marginal",
          [](const SlitPairParams& p, const Grid1D& g) { return to_array(analytic::sample_p_marginal(p, g).values); });

    m.def(
        "wigner_numeric",
        [](const SlitPairParams& p, const Grid2D& g, unsigned threads) {
            numeric::NumericOptions opts{.threads = threads};
            auto psi = numeric::sample_wavefunction(p, g.x_axis);
            psi = numeric::propagate_free(psi, p.alpha, p.hbar, opts);
            WignerField field = [&] {
                py::gil_scoped_release release;
                return numeric::wigner_numeric(psi, g.p_axis, p.hbar, opts);
            }();
            return to_array(field);
        },
        py::arg("params"), py::arg("grid"), py::arg("threads") = 1);

    m.def(
        "shear",
        [](const Grid2D& g, const py::array_t<double, py::array::c_style | py::array::forcecast>& a, double alpha) {
            return to_array(numeric::shear_wdf(from_array(g, a), alpha));
        },
        py::arg("grid"), py::arg("field"), py::arg("alpha"));

    m.def(
        "marginals",
        [](const Grid2D& g, const py::array_t<double, py::array::c_style | py::array::forcecast>& a, double hbar) {
            auto [xm, pm] = numeric::marginals_from_wdf(from_array(g, a), hbar);
            return py::make_tuple(to_array(xm.values), to_array(pm.values));
        },
        py::arg("grid"), py::arg("field"), py::arg("hbar") = 1.0);

    m.def(
        "fringe_maxima",
        [](const Grid1D& g, const std::vector<double>& v, double prominence) {
            return analysis::find_fringe_maxima(curve(Axis::position, g, v), prominence);
        },
        py::arg("grid"), py::arg("values"), py::arg("prominence") = analysis::kDefaultProminence);
    m.def(
        "fringe_period",
        [](const Grid1D& g, const std::vector<double>& v) { return analysis::fringe_period(curve(Axis::position, g, v)); },
        py::arg("grid"), py::arg("values"));
    m.def(
        "fringe_shift",
        [](const Grid1D& g, const std::vector<double>& v, const std::vector<double>& ref) {
            return analysis::fringe_shift(curve(Axis::position, g, v), curve(Axis::position, g, ref));
        },
        py::arg("grid"), py::arg("values"), py::arg("reference"));
    m.def(
        "common_projection_interval",
        [](const Grid2D& g, const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& b, Axis axis, double threshold) {
            return analysis::common_projection_interval(from_array(g, a), from_array(g, b), axis, threshold);
        },
        py::arg("grid"), py::arg("field1"), py::arg("field2"), py::arg("axis"), py::arg("threshold"));
}
