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

#include "modwit/bvloc.hpp"

#include <gsl/gsl_integration.h>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>

#include "modwit/dga.hpp"

namespace modwit {

const double kFixedPointConstant = 1.0 / (2.0 * std::numbers::pi);

Polynomial Polynomial::parse(const std::string& text) {
  static const AlgebraPtr alg = Algebra::create({{"z", 0, 0, false, ""}}, 0);
  Element<Rational> e = parse_element(alg, text);
  Polynomial p;
  for (const auto& [m, c] : e.terms()) {
    int d = m.e[0];
    if (d < 0) throw std::invalid_argument("negative power of z in '" + text + "'");
    if (static_cast<int>(p.coeffs.size()) <= d) p.coeffs.resize(static_cast<std::size_t>(d) + 1);
    p.coeffs[static_cast<std::size_t>(d)] += c;
  }
  return p;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(coeffs[i] * Rational(static_cast<long>(i)));
  return d;
}

double Polynomial::operator()(double z) const {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i].get_d();
  return acc;
}

Rational Polynomial::at(const Rational& z) const {
  Rational acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r = *this;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

std::string Polynomial::render() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    Rational mag = abs(coeffs[i]);
    std::string body = mono.empty() ? to_string(mag) : (mag == 1 ? mono : "(" + to_string(mag) + ")*" + mono);
    if (out.empty()) {
      out = (coeffs[i] < 0 ? "-" : "") + body;
    } else {
      out += (coeffs[i] < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

double EquivariantSurfaceProblem::degree0(double z) const {
  if (!t) return alpha0(z);
  return std::exp(*t * alpha0(z));
}

double EquivariantSurfaceProblem::degree2(double z) const {
  if (!t) return g(z);
  // exp(t (a0 + a2)) = exp(t a0) (1 + t a2) since a2^2 = 0
  return *t * std::exp(*t * alpha0(z)) * g(z);
}

double EquivariantSurfaceProblem::degree0_derivative(double z) const {
  double d = alpha0.derivative()(z);
  if (!t) return d;
  return *t * d * std::exp(*t * alpha0(z));
}

namespace {

struct GlTable {
  explicit GlTable(int n) : table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n))) {
    if (!table) throw std::runtime_error("cannot allocate Gauss-Legendre table");
  }
  ~GlTable() { gsl_integration_glfixed_table_free(table); }
  GlTable(const GlTable&) = delete;
  GlTable& operator=(const GlTable&) = delete;

  std::pair<double, double> node(int i) const {
    double x = 0.0;
    double w = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &x, &w, table);
    return {x, w};
  }
  int size() const { return static_cast<int>(table->n); }

  gsl_integration_glfixed_table* table;
};

void check_grid(const EquivariantSurfaceProblem& p) {
  if (p.grid < 1) throw std::invalid_argument("quadrature grid must be positive");
}

}  // namespace

double q_closedness_residual(const EquivariantSurfaceProblem& p) {
  check_grid(p);
  GlTable gl(p.grid);
  const double s = p.s.get_d();
  double worst = 0.0;
  for (int i = 0; i < gl.size(); ++i) {
    double z = gl.node(i).first;
    worst = std::max(worst, std::abs(p.degree0_derivative(z) + s * p.degree2(z)));
  }
  for (double z : {-1.0, 1.0}) worst = std::max(worst, std::abs(p.degree0_derivative(z) + s * p.degree2(z)));
  return worst;
}

double surface_integral(const EquivariantSurfaceProblem& p) {
  check_grid(p);
  GlTable gl(p.grid);
  const int nphi = p.grid;
  const double h = 2.0 * std::numbers::pi / nphi;
  double total = 0.0;
  for (int i = 0; i < gl.size(); ++i) {
    auto [z, w] = gl.node(i);
    // the integrand does not depend on phi; the periodic trapezoid sum is
    // kept explicit so that the rule is the tensor-product one
    double row = 0.0;
    double value = p.degree2(z);
    for (int k = 0; k < nphi; ++k) row += value * h;
    total += w * row;
  }
  return total;
}

LocalizationReport bv_localize(const EquivariantSurfaceProblem& p, double closedness_tolerance) {
  if (p.s == 0) throw FixedPointDegenerate("rotation speed s = 0: every point is fixed");
  LocalizationReport r;
  r.closedness = q_closedness_residual(p);
  if (r.closedness > closedness_tolerance) {
    throw std::domain_error("form is not equivariantly closed (residual " + std::to_string(r.closedness) + ")");
  }
  const double s = p.s.get_d();
  r.lhs = surface_integral(p);
  const double e_north = -s * kFixedPointConstant;
  const double e_south = s * kFixedPointConstant;
  r.rhs = p.degree0(1.0) / e_north + p.degree0(-1.0) / e_south;
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

double calibrate_fixed_point_constant(const EquivariantSurfaceProblem& p) {
  if (p.s == 0) throw FixedPointDegenerate("rotation speed s = 0: every point is fixed");
  double jump = p.degree0(1.0) - p.degree0(-1.0);
  if (jump == 0.0) throw std::invalid_argument("calibration needs alpha0(1) != alpha0(-1)");
  double lhs = surface_integral(p);
  // lhs = a(1)/(-s C) + a(-1)/(s C) = -(a(1) - a(-1)) / (s C)
  return -jump / (p.s.get_d() * lhs);
}

EquivariantSurfaceProblem parse_problem(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("problem is not valid YAML: ") + e.what());
  }
  if (!root.IsMap() || !root["alpha0"] || !root["g"] || !root["s"]) {
    throw std::invalid_argument("problem needs alpha0, g and s");
  }
  EquivariantSurfaceProblem p;
  p.alpha0 = Polynomial::parse(root["alpha0"].as<std::string>());
  p.g = Polynomial::parse(root["g"].as<std::string>());
  p.s = parse_rational(root["s"].as<std::string>());
  if (root["grid"]) p.grid = root["grid"].as<int>();
  if (root["t"]) p.t = parse_rational(root["t"].as<std::string>()).get_d();
  check_grid(p);
  return p;
}

EquivariantSurfaceProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace modwit
