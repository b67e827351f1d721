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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modwit/rational.hpp"

namespace modwit {

// Dense polynomial in z with rational coefficients, lowest degree first.
struct Polynomial {
  std::vector<Rational> coeffs;

  static Polynomial parse(const std::string& text);
  Polynomial derivative() const;
  double operator()(double z) const;
  Rational at(const Rational& z) const;
  Polynomial operator*(const Rational& c) const;
  std::string render() const;
};

// Sphere with coordinates z in [-1, 1] and phi in [0, 2 pi), rotated by
// xi = s d/dphi. The equivariant form is alpha0(z) + g(z) dz^dphi, or its
// exponential exp(t alpha) when t is set.
struct EquivariantSurfaceProblem {
  Polynomial alpha0;
  Polynomial g;
  Rational s = 1;
  int grid = 512;
  std::optional<double> t;

  // Degree-0 and degree-2 parts of the (possibly exponentiated) form.
  double degree0(double z) const;
  double degree2(double z) const;
  double degree0_derivative(double z) const;
};

class FixedPointDegenerate : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LocalizationReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double closedness = 0.0;
};

// Weight at a fixed point: e(z = +1) = -s C, e(z = -1) = +s C.
extern const double kFixedPointConstant;

// max over the quadrature nodes of |alpha0'(z) + s g(z)|.
double q_closedness_residual(const EquivariantSurfaceProblem& p);

// Integral of the top-degree part by Gauss-Legendre in z and the
// trapezoid rule in phi.
double surface_integral(const EquivariantSurfaceProblem& p);

LocalizationReport bv_localize(const EquivariantSurfaceProblem& p, double closedness_tolerance = 1e-9);

// Constant C that makes the fixed-point sum reproduce the quadrature on a
// closed problem with alpha0(1) != alpha0(-1).
double calibrate_fixed_point_constant(const EquivariantSurfaceProblem& p);

// {alpha0: "z", g: "-1", s: "1", grid: 512, t: 0.5}
EquivariantSurfaceProblem parse_problem(const std::string& yaml_text);
EquivariantSurfaceProblem load_problem(const std::string& path);

}  // namespace modwit
