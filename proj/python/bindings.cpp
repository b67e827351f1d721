/*
 * Copyright 2026 The modwit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "modwit/bvloc.hpp"
#include "modwit/cli.hpp"
#include "modwit/eisenstein.hpp"
#include "modwit/io.hpp"
#include "modwit/pfaff.hpp"
#include "modwit/witten.hpp"

namespace py = pybind11;
using namespace modwit;

namespace {

std::vector<std::string> coeff_strings(const QSeries& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

Matrix<Rational> rational_matrix(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  Matrix<Rational> M(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) M(i, j) = parse_rational(rows[i][j]);
  }
  return M;
}

py::dict report_dict(const StringReport& r) {
  py::dict d;
  d["weight"] = r.weight;
  d["series"] = r.genus;
  d["decomposition"] = r.decomposition.render();
  d["e2_part"] = r.e2_part.render();
  d["verdict"] = r.verdict();
  d["symbolic_agrees"] = r.symbolic_agrees;
  return d;
}

}  // namespace

PYBIND11_MODULE(_modwit, m) {
  m.doc() = "Exact Eisenstein series, Witten classes, regularized Pfaffians and localization checks";

  py::register_exception<NoDecomposition>(m, "NoDecomposition", PyExc_ValueError);
  py::register_exception<NotInvertible>(m, "NotInvertible", PyExc_ArithmeticError);
  py::register_exception<NotDivisible>(m, "NotDivisible", PyExc_ArithmeticError);
  py::register_exception<FixedPointDegenerate>(m, "FixedPointDegenerate", PyExc_ValueError);

  py::class_<QSeries>(m, "QSeries")
      .def_property_readonly("weight", &QSeries::weight)
      .def_property_readonly("min_exp", &QSeries::min_exp)
      .def_property_readonly("order", &QSeries::order)
      .def_property_readonly("is_exact", &QSeries::is_exact)
      .def_property_readonly("coeffs", &coeff_strings, "coefficients as exact 'p/q' strings")
      .def("coefficient", [](const QSeries& f, int n) { return to_string(f.coefficient(n)); })
      .def("evaluate", &QSeries::evaluate, py::arg("q"))
      .def("to_record", &qseries_to_yaml)
      .def_static("from_record", &qseries_from_yaml)
      .def("__add__", [](const QSeries& a, const QSeries& b) { return a + b; })
      .def("__sub__", [](const QSeries& a, const QSeries& b) { return a - b; })
      .def("__mul__", [](const QSeries& a, const QSeries& b) { return a * b; })
      .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
      .def("__str__", &QSeries::render)
      .def("__repr__", [](const QSeries& f) { return "QSeries(" + f.render() + ")"; });

  m.def("eisenstein_q", &eisenstein_q, py::arg("k"), py::arg("order"),
        "Normalized E_{2k} with constant term 1, coefficients below q^order.");
  m.def("eisenstein_hat", &eisenstein_hat, py::arg("k"), py::arg("order"));
  m.def(
      "eisenstein_lattice",
      [](int k, Complex tau, const std::string& ordering, long bound) {
        auto ord = ordering.empty() ? default_ordering(k, bound) : LatticeOrdering::parse(ordering, bound);
        return eisenstein_lattice(k, tau, ord);
      },
      py::arg("k"), py::arg("tau"), py::arg("ordering") = "", py::arg("bound") = 50);
  m.def(
      "transform_residual",
      [](int k, std::array<long, 4> g, Complex tau, long bound) {
        return transform_residual(k, GammaElement(g[0], g[1], g[2], g[3]), tau, bound);
      },
      py::arg("k"), py::arg("gamma"), py::arg("tau"), py::arg("bound") = 200);
  m.def("two_zeta", &two_zeta, py::arg("k"));

  m.def(
      "decompose",
      [](const QSeries& f) {
        auto p = quasi_modular_decompose(f);
        py::dict d;
        d["decomposition"] = p.render();
        d["e2_part"] = p.e2_part().render();
        d["modular"] = !p.involves_e2();
        return d;
      },
      py::arg("series"));

  m.def(
      "pfaffian", [](const std::vector<std::vector<std::string>>& rows) { return to_string(pfaffian(rational_matrix(rows))); },
      py::arg("matrix"), "Pfaffian of a skew matrix given as rows of rational strings.");
  m.def(
      "determinant",
      [](const std::vector<std::vector<std::string>>& rows) { return to_string(determinant(rational_matrix(rows))); },
      py::arg("matrix"));

  m.def(
      "witten_class",
      [](int roots, int dim, int q_order) { return witten_class(ChernRootModel(roots, dim), q_order).render(); },
      py::arg("roots"), py::arg("dim"), py::arg("q_order") = 10);
  m.def(
      "witten_class_q0", [](int roots, int dim) { return witten_class_q0(ChernRootModel(roots, dim)).render(); },
      py::arg("roots"), py::arg("dim"));
  m.def(
      "a_hat_taylor", [](int roots, int dim, int power) { return a_hat_taylor(ChernRootModel(roots, dim), power).render(); },
      py::arg("roots"), py::arg("dim"), py::arg("power") = 1);
  m.def(
      "witten_genus", [](const std::string& descriptor, int q_order) {
        return witten_genus(parse_descriptor(descriptor), q_order);
      },
      py::arg("descriptor"), py::arg("q_order") = 10, "Genus of a descriptor record such as {dim: 4, ...}.");
  m.def(
      "string_modularity_check",
      [](const std::string& descriptor, int q_order) {
        return report_dict(string_modularity_check(parse_descriptor(descriptor), q_order));
      },
      py::arg("descriptor"), py::arg("q_order") = 10);

  m.def(
      "regularized_product",
      [](int roots, int dim, long bound, Complex tau, const std::string& ordering) {
        ChernRootModel model(roots, dim);
        auto ord = LatticeOrdering::parse(ordering, bound);
        return regularized_product<Complex>(model, ord, tau).render();
      },
      py::arg("roots"), py::arg("dim"), py::arg("bound"), py::arg("tau") = Complex(0.0, 2.0),
      py::arg("ordering") = "shells");
  m.def(
      "regularized_product_identity",
      [](int roots, int dim, long bound, const std::string& tau_re, const std::string& tau_im) {
        ChernRootModel model(roots, dim);
        GaussianPi tau(GaussianRational{parse_rational(tau_re), parse_rational(tau_im)});
        auto ord = LatticeOrdering::symmetric_shells(bound);
        return regularized_product(model, ord, tau) == lattice_exponential(model, ord, tau);
      },
      py::arg("roots"), py::arg("dim"), py::arg("bound"), py::arg("tau_re") = "0", py::arg("tau_im") = "2",
      "Exact check that the finite product equals the exponential of lattice sums.");

  m.def(
      "verify_anomaly",
      [](int roots, int dim, int q_order) {
        auto c = verify_anomaly(ChernRootModel(roots, dim), q_order);
        py::dict d;
        d["ok"] = c.ok();
        d["symbolic"] = c.symbolic_ok;
        d["series"] = c.series_ok;
        d["vanishes_mod_p1"] = c.vanishes_mod_p1;
        d["delta"] = c.delta;
        d["primitive"] = c.primitive;
        return d;
      },
      py::arg("roots"), py::arg("dim"), py::arg("q_order") = 6);

  m.def(
      "bv_localize",
      [](const std::string& problem) {
        auto r = bv_localize(parse_problem(problem));
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["residual"] = r.residual;
        d["closedness"] = r.closedness;
        return d;
      },
      py::arg("problem"), "Fixed-point check for a problem record such as {alpha0: z, g: '-1', s: '1'}.");
  m.attr("FIXED_POINT_CONSTANT") = kFixedPointConstant;

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
