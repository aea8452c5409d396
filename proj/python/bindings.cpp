#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvbell/bell.hpp"
#include "cvbell/bell_json.hpp"
#include "cvbell/errors.hpp"
#include "cvbell/fock.hpp"
#include "cvbell/gaussian.hpp"
#include "cvbell/optimizer.hpp"
#include "cvbell/parity.hpp"

namespace py = pybind11;
using namespace cvbell;

namespace {

PhasePoint to_point(const std::vector<Complex>& alphas) { return PhasePoint(alphas); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Continuous-variable GHZ states, displaced-parity correlations and Mermin-Klyshko sums";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);
  py::register_exception<CapacityExceeded>(m, "CapacityExceeded", PyExc_OverflowError);

  py::class_<GaussianState>(m, "GaussianState")
      .def(py::init<Eigen::MatrixXd>())
      .def_property_readonly("modes", &GaussianState::modes)
      .def_property_readonly("covariance", &GaussianState::covariance);

  m.def("vacuum_state", &vacuum_state, py::arg("modes"));
  m.def(
      "build_ghz_state", [](int n, double r) { return build_ghz_state(n, Squeezing(r)); },
      py::arg("modes"), py::arg("r"));
  m.def(
      "wigner_at",
      [](const GaussianState& s, const std::vector<Complex>& a) { return wigner_at(s, to_point(a)); },
      py::arg("state"), py::arg("alphas"));
  m.def("quadratic_form_of", &quadratic_form_of, py::arg("state"));
  m.def("symplectic_eigenvalues", &symplectic_eigenvalues, py::arg("state"));

  m.def(
      "pi_closed_form",
      [](int n, double r, const std::vector<Complex>& a) {
        return pi_closed_form(n, Squeezing(r), to_point(a)).value();
      },
      py::arg("n"), py::arg("r"), py::arg("alphas"));
  m.def(
      "pi_from_state",
      [](const GaussianState& s, const std::vector<Complex>& a) {
        return pi_from_state(s, to_point(a)).value();
      },
      py::arg("state"), py::arg("alphas"));

  py::class_<BellValue>(m, "BellValue")
      .def_readonly("value", &BellValue::value)
      .def_readonly("n", &BellValue::n)
      .def_readonly("cancellation_error", &BellValue::cancellation_error)
      .def_readonly("extended_precision", &BellValue::extended_precision)
      .def("__float__", [](const BellValue& v) { return v.value; })
      .def("__repr__", [](const BellValue& v) {
        return "BellValue(n=" + std::to_string(v.n) + ", value=" + std::to_string(v.value) + ")";
      });

  // Coefficients come back as (numerator, den_pow2) with numerator a Python int.
  m.def("mk_expand", [](int n) {
    py::list out;
    for (const auto& t : mk_expand(n)) {
      out.append(py::make_tuple(py::int_(py::str(t.coefficient.num().str())),
                                t.coefficient.den_pow2(), t.selector));
    }
    return out;
  }, py::arg("n"));
  m.def("class_coefficients", [](int n) {
    py::list out;
    for (const auto& c : class_coefficients(n).coeffs) {
      out.append(py::make_tuple(py::int_(py::str(c.num().str())), c.den_pow2()));
    }
    return out;
  }, py::arg("n"));
  m.def("expansion_json", [](int n, bool full) {
    auto doc = classes_to_json(class_coefficients(n));
    if (full) doc["terms"] = terms_to_json(n, mk_expand(n))["terms"];
    return doc.dump();
  }, py::arg("n"), py::arg("full") = false);

  m.def("pi_by_class", &pi_by_class, py::arg("n"), py::arg("r"), py::arg("j"), py::arg("k"));
  m.def("bell_value_equal_settings", &bell_value_equal_settings, py::arg("n"), py::arg("r"),
        py::arg("j"));
  m.def("bell_asymptotic", &bell_asymptotic, py::arg("n"), py::arg("a"));
  m.def("bell_zero_squeezing", &bell_zero_squeezing, py::arg("n"), py::arg("j"));
  m.def(
      "bell_value_general",
      [](int n, double r, double j, const std::vector<double>& phases) {
        return bell_value_general(n, r, SettingsTable::equal_magnitude(j, phases));
      },
      py::arg("n"), py::arg("r"), py::arg("j"), py::arg("phases"));

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("argmax", &OptimizationResult::argmax)
      .def_readonly("value", &OptimizationResult::value)
      .def_readonly("bracket", &OptimizationResult::bracket)
      .def_readonly("evaluations", &OptimizationResult::evaluations)
      .def_readonly("phases", &OptimizationResult::phases)
      .def_readonly("cancellation_error", &OptimizationResult::cancellation_error)
      .def_property_readonly("local_maxima", [](const OptimizationResult& r) {
        py::list out;
        for (const auto& e : r.local_maxima) out.append(py::make_tuple(e.arg, e.value));
        return out;
      });

  m.def(
      "maximize_over_displacement",
      [](int n, double r, double j_hi) { return maximize_over_displacement(n, r, j_hi); },
      py::arg("n"), py::arg("r"), py::arg("j_hi") = kDefaultDisplacementCeiling);
  m.def(
      "maximize_asymptotic", [](int n, double a_hi) { return maximize_asymptotic(n, a_hi); },
      py::arg("n"), py::arg("a_hi") = kDefaultScaledCeiling);
  m.def(
      "optimize_phases", [](int n, double r, double j) { return optimize_phases(n, r, j); },
      py::arg("n"), py::arg("r"), py::arg("j"));

  m.def(
      "fock_parity",
      [](int n, double r, int cutoff, const std::vector<Complex>& a) {
        return displaced_parity_expectation(build_fock_ghz(n, Squeezing(r), cutoff), to_point(a))
            .value();
      },
      py::arg("n"), py::arg("r"), py::arg("cutoff"), py::arg("alphas"),
      "Displaced-parity correlation of the GHZ network built in the photon-number basis.");
}
