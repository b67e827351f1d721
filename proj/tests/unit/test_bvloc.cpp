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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "modwit/bvloc.hpp"

using namespace modwit;

namespace {

EquivariantSurfaceProblem problem(const std::string& alpha0, const std::string& g, Rational s,
                                  std::optional<double> t = std::nullopt, int grid = 512) {
  EquivariantSurfaceProblem p;
  p.alpha0 = Polynomial::parse(alpha0);
  p.g = Polynomial::parse(g);
  p.s = s;
  p.t = t;
  p.grid = grid;
  return p;
}

// Closed partner of alpha0: g = -alpha0' / s.
EquivariantSurfaceProblem closed(const std::string& alpha0, Rational s, std::optional<double> t = std::nullopt) {
  Polynomial a = Polynomial::parse(alpha0);
  EquivariantSurfaceProblem p;
  p.alpha0 = a;
  p.g = a.derivative() * (Rational(-1) / s);
  p.s = s;
  p.t = t;
  return p;
}

}  // namespace

TEST_SUITE("bvloc") {
  TEST_CASE("polynomials") {
    Polynomial p = Polynomial::parse("3*z^2 - (1/2)*z + 1");
    CHECK(p.at(2) == rational(12, 1));
    CHECK(p(2.0) == doctest::Approx(12.0));
    CHECK(p.derivative().render() == Polynomial::parse("6*z - (1/2)").render());
    CHECK_THROWS_AS(Polynomial::parse("w + 1"), std::invalid_argument);
  }

  TEST_CASE("Q-closedness residual") {
    CHECK(q_closedness_residual(problem("z", "-1", 1)) < 1e-15);
    CHECK(q_closedness_residual(problem("z", "(-1/2)", 2)) < 1e-15);
    CHECK(q_closedness_residual(problem("z^2", "-2*z", 1)) < 1e-12);
    for (Rational s : {rational(1, 2), Rational(2), Rational(5)}) {
      CHECK(q_closedness_residual(problem("z", "1", s)) >= std::abs(1 - s.get_d()));
    }
    // exponentiated family stays closed
    CHECK(q_closedness_residual(closed("z^3 - z", 2, 0.5)) < 1e-12);
  }

  TEST_CASE("localization on closed forms") {
    auto zero = bv_localize(problem("0", "0", 1));
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    auto cal = bv_localize(problem("z", "-1", 1));
    // the area form integrates to -4 pi against alpha0 = z
    CHECK(cal.lhs == doctest::Approx(-4.0 * std::numbers::pi).epsilon(1e-12));
    CHECK(cal.residual < 1e-9);
    CHECK(calibrate_fixed_point_constant(problem("z", "-1", 1)) ==
          doctest::Approx(kFixedPointConstant).epsilon(1e-12));
    CHECK(kFixedPointConstant == doctest::Approx(1.0 / (2.0 * std::numbers::pi)));
    for (const char* a : {"z^2", "z^3 - 2*z", "5*z^5 + z^4 - z"}) {
      for (Rational s : {rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
        CHECK(bv_localize(closed(a, s)).residual < 1e-9);
      }
    }
  }

  TEST_CASE("Duistermaat-Heckman exponential family") {
    for (double t : {0.5, 1.0, 2.0}) {
      for (Rational s : {rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
        auto rep = bv_localize(closed("z", s, t));
        CHECK(rep.residual < 1e-9);
        // exact value of the fixed-point sum
        double expected = -2.0 * std::numbers::pi * (std::exp(t) - std::exp(-t)) / s.get_d();
        CHECK(rep.rhs == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("scaling in the rotation speed") {
    auto one = bv_localize(closed("z", 1));
    auto two = bv_localize(closed("z", 2));
    CHECK(two.rhs == doctest::Approx(one.rhs / 2.0).epsilon(1e-12));
  }

  TEST_CASE("grid refinement") {
    // integrand of high degree; Gauss-Legendre is exact once the grid is
    // large enough, and the error falls monotonically before that
    double prev = 1e300;
    for (int grid : {2, 3, 4, 6}) {
      auto p = closed("z^11 + z", 1);
      p.grid = grid;
      auto rep = bv_localize(p);
      CHECK(rep.residual <= prev);
      prev = rep.residual;
    }
    CHECK(prev < 1e-10);
    double prev_exp = 1e300;
    for (int grid : {2, 4, 8, 16}) {
      auto p = closed("3*z", 1, 1.0);
      p.grid = grid;
      double r = bv_localize(p).residual;
      CHECK(r <= prev_exp);
      prev_exp = r;
    }
    CHECK(prev_exp < 1e-9);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(bv_localize(problem("z", "-1", 0)), FixedPointDegenerate);
    CHECK_THROWS_AS(bv_localize(problem("z", "1", 2)), std::domain_error);
    CHECK_THROWS_AS(parse_problem("{alpha0: z}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem("{alpha0: z, g: '-1', s: 1, grid: 0}"), std::invalid_argument);
    auto p = parse_problem("{alpha0: z, g: '-1', s: '1', grid: 64, t: 0.5}");
    CHECK(p.grid == 64);
    CHECK(p.t.has_value());
  }
}
