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

#include <random>

#include "modwit/dga.hpp"

using namespace modwit;

namespace {

using E = Element<Rational>;

// x, y even of degree 2, e odd of degree 1 with de = x, H of degree 3 with
// dH = x^2, u invertible of degree 0.
AlgebraPtr test_algebra(int D = 8) {
  return Algebra::create({{"x", 2, 0, false, ""},
                          {"y", 2, 0, false, ""},
                          {"e", 1, 0, false, "x"},
                          {"f", 1, 0, false, ""},
                          {"H", 3, 0, false, "x^2"},
                          {"u", 0, 0, true, ""}},
                         D);
}

E random_element(const AlgebraPtr& alg, std::mt19937_64& rng) {
  const char* names[] = {"x", "y", "e", "f", "H", "u"};
  std::uniform_int_distribution<int> pick(0, 5), pw(0, 2), cf(-5, 5), nterms(1, 4);
  E r(alg);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    E m = E::constant(alg, Rational(cf(rng)));
    int factors = pw(rng) + 1;
    for (int j = 0; j < factors; ++j) m = m * E::generator(alg, names[pick(rng)]);
    r += m;
  }
  return r;
}

int homogeneous_degree(const E& a) {
  int d = -1;
  for (const auto& [m, c] : a.terms()) {
    int k = a.algebra()->form_degree(m);
    if (d >= 0 && k != d) return -1;
    d = k;
  }
  return d;
}

}  // namespace

TEST_SUITE("dga") {
  TEST_CASE("algebra construction is validated") {
    CHECK_THROWS_AS(Algebra::create({{"x", 2, 0, false, ""}, {"x", 2, 0, false, ""}}, 4), std::invalid_argument);
    // differential must raise the degree by one
    CHECK_THROWS_AS(Algebra::create({{"x", 2, 0, false, ""}, {"e", 1, 0, false, "x^2"}}, 8),
                    std::invalid_argument);
    // d^2 must vanish: de = f with df = x
    CHECK_THROWS_AS(
        Algebra::create({{"x", 2, 0, false, ""}, {"e", 1, 0, false, "f"}, {"f", 2, 0, false, "g"}, {"g", 3, 0, false, ""}},
                        8),
        std::invalid_argument);
    // only degree-0 generators may be inverted
    CHECK_THROWS_AS(Algebra::create({{"x", 2, 0, true, ""}}, 4), std::invalid_argument);
    auto alg = test_algebra();
    CHECK(alg->size() == 6);
    CHECK(alg->index_of("nope") < 0);
    CHECK_THROWS_AS(alg->require("nope"), std::invalid_argument);
  }

  TEST_CASE("graded commutativity and truncation") {
    auto alg = test_algebra(4);
    E e = E::generator(alg, "e"), f = E::generator(alg, "f"), x = E::generator(alg, "x");
    CHECK(e * f == -(f * e));
    CHECK((e * e).is_zero());
    CHECK(x * e == e * x);
    CHECK((x * x).form_degree_part(4) == x * x);
    CHECK((x * x * x).is_zero());  // degree 6 > 4
    CHECK((x * x * e).is_zero());
    CHECK(e.is_odd());
    CHECK((e * f).is_even());
  }

  TEST_CASE("rendering and parsing round trip") {
    auto alg = test_algebra();
    E a = parse_element(alg, "1 + (1/2)*x^2*u^-1 - 3*e*f + u");
    CHECK(parse_element(alg, a.render()) == a);
    CHECK(parse_element(alg, "x·y") == E::generator(alg, "x") * E::generator(alg, "y"));
    CHECK(parse_element(alg, "-e*f") == parse_element(alg, "f*e"));
    CHECK(E(alg).render() == "0");
    CHECK_THROWS_AS(parse_element(alg, "z"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(alg, "x^-1"), NotInvertible);
  }

  TEST_CASE("differential: d^2 = 0 and the Leibniz rule on random elements") {
    auto alg = test_algebra(10);
    std::mt19937_64 rng(7);
    CHECK(differential(E::generator(alg, "e")) == E::generator(alg, "x"));
    CHECK(differential(E::generator(alg, "H")) == E::generator(alg, "x").pow(2));
    CHECK(differential(E::generator(alg, "u").pow(-2)).is_zero());
    for (int trial = 0; trial < 200; ++trial) {
      E a = random_element(alg, rng);
      E b = random_element(alg, rng);
      CHECK(differential(differential(a)).is_zero());
      // Leibniz for a homogeneous first factor
      for (int deg = 0; deg <= 10; ++deg) {
        E ad = a.form_degree_part(deg);
        if (ad.is_zero()) continue;
        REQUIRE(homogeneous_degree(ad) == deg);
        E lhs = differential(ad * b);
        E rhs = differential(ad) * b + (deg % 2 ? -(ad * differential(b)) : ad * differential(b));
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("exp and log of nilpotent elements") {
    auto alg = test_algebra(8);
    std::mt19937_64 rng(11);
    E x = E::generator(alg, "x"), y = E::generator(alg, "y");
    CHECK(exp_nilpotent(E(alg)) == E::constant(alg, 1));
    CHECK(exp_nilpotent(x) == parse_element(alg, "1 + x + (1/2)*x^2 + (1/6)*x^3 + (1/24)*x^4"));
    CHECK(exp_nilpotent(x + y) == exp_nilpotent(x) * exp_nilpotent(y));
    for (int trial = 0; trial < 50; ++trial) {
      E a = random_element(alg, rng);
      a = a - a.form_degree_part(0);
      if (!a.is_even()) a = a.form_degree_part(2) + a.form_degree_part(4);
      CHECK(log_unital(exp_nilpotent(a)) == a);
      CHECK(exp_nilpotent(log_unital(E::constant(alg, 1) + a)) == E::constant(alg, 1) + a);
    }
    CHECK_THROWS_AS(exp_nilpotent(E::generator(alg, "u")), std::domain_error);
    CHECK_THROWS_AS(exp_nilpotent(E::generator(alg, "e")), std::domain_error);
  }

  TEST_CASE("inverses, exact division and relations") {
    auto alg = test_algebra(8);
    E one = E::constant(alg, 1);
    E x = E::generator(alg, "x"), u = E::generator(alg, "u"), y = E::generator(alg, "y");
    E a = parse_element(alg, "2*u + x - u^-1*y*x");
    CHECK(a * inverse_unit(a) == one);
    CHECK(u * u.pow(-1) == one);
    CHECK_THROWS_AS(inverse_unit(x), NotInvertible);
    CHECK_THROWS_AS(inverse_unit(u + one), NotInvertible);
    E p = x * x + x * y;
    CHECK(divide_exact(p, x) == x + y);
    CHECK(divide_exact(p * u, x * u) == x + y);
    CHECK_THROWS_AS(divide_exact(p, x + y), std::invalid_argument);
    CHECK(u.pow(-2) * u.pow(3) == u);
    CHECK_THROWS_AS(x.pow(-1), NotInvertible);
    CHECK_THROWS_AS(divide_exact(x + y, x), NotDivisible);
    // impose x + y = 0: x is replaced by -y
    E r = impose_relation(x * x + x * y + y, x + y);
    CHECK(r == y);
    CHECK(impose_relation(x * y * y, x).is_zero());
  }

  TEST_CASE("substitution is an algebra homomorphism") {
    auto alg = test_algebra(8);
    std::mt19937_64 rng(5);
    std::map<std::string, E> images = {{"x", parse_element(alg, "x + y")},
                                       {"u", parse_element(alg, "2*u")},
                                       {"e", parse_element(alg, "e + f")}};
    for (int trial = 0; trial < 50; ++trial) {
      E a = random_element(alg, rng), b = random_element(alg, rng);
      CHECK(substitute(a * b, alg, images) == substitute(a, alg, images) * substitute(b, alg, images));
      CHECK(substitute(a + b, alg, images) == substitute(a, alg, images) + substitute(b, alg, images));
    }
    E s = specialize<Rational>(parse_element(alg, "u^2*x + u^-1"), std::map<std::string, Rational>{{"u", 2}});
    CHECK(s == parse_element(alg, "4*x + (1/2)"));
    CHECK_THROWS_AS(specialize<Rational>(E::generator(alg, "x"), std::map<std::string, Rational>{{"x", 1}}),
                    std::invalid_argument);
  }

  TEST_CASE("scalar lifting and rational projection") {
    auto alg = test_algebra(8);
    E a = parse_element(alg, "(1/3)*x + 2");
    auto g = lift<GaussianPi>(a);
    CHECK(project_rational(g) == a);
    auto h = g.scaled(GaussianPi::pi(1));
    CHECK_THROWS(project_rational(h));
    auto c = lift<Complex>(a);
    Monomial mx;
    mx.e[static_cast<std::size_t>(alg->require("x"))] = 1;
    CHECK(c.coefficient(mx).real() == doctest::Approx(1.0 / 3.0));
  }
}
