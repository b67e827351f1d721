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

#include "modwit/geom.hpp"

using namespace modwit;

namespace {

using E = Element<Rational>;

Rational power_sum(const std::vector<Rational>& y, int k) {
  Rational s = 0;
  for (const auto& v : y) {
    Rational p = 1;
    for (int i = 0; i < k; ++i) p *= v;
    s += p;
  }
  return s;
}

Rational elementary(const std::vector<Rational>& y, int k) {
  // coefficient of t^k in prod (1 + y_j t)
  std::vector<Rational> c(y.size() + 1);
  c[0] = 1;
  for (const auto& v : y) {
    for (std::size_t i = y.size(); i >= 1; --i) c[i] += v * c[i - 1];
  }
  return k <= static_cast<int>(y.size()) ? c[static_cast<std::size_t>(k)] : Rational(0);
}

// Evaluates a polynomial in the named generators at rational values.
Rational evaluate(const E& a, const std::map<std::string, Rational>& values) {
  Rational total = 0;
  for (const auto& [m, c] : a.terms()) {
    Rational t = c;
    for (const auto& [name, v] : values) {
      for (int k = 0; k < exponent_of(*a.algebra(), m, name); ++k) t *= v;
    }
    total += t;
  }
  return total;
}

}  // namespace

TEST_SUITE("geom") {
  TEST_CASE("Chern-root model layout") {
    ChernRootModel model(3, 12);
    const auto& alg = model.algebra();
    for (const char* g : {"G2", "G4", "G6", "b", "j", "u", "x1", "x2", "x3", "H"}) CHECK(alg->index_of(g) >= 0);
    CHECK(alg->index_of("G8") < 0);
    CHECK(model.eisenstein_count() == 3);
    CHECK(differential(model.gen("H")) == model.p1());
    CHECK(model.p1() == parse_element(alg, "x1^2 + x2^2 + x3^2"));
    auto R = model.curvature<GaussianPi>();
    CHECK(R.rows() == 6);
    validate_skew(R);
    CHECK_THROWS_AS(ChernRootModel(-1, 4), std::invalid_argument);
  }

  TEST_CASE("Pontryagin character components are power sums over k") {
    for (int r = 1; r <= 3; ++r) {
      ChernRootModel model(r, 12);
      for (int k = 1; k <= 3; ++k) {
        E s(model.algebra());
        for (int j = 1; j <= r; ++j) s += model.root(j).pow(2 * k);
        CHECK(pontryagin_character_component(model, k) == s.scaled(rational(1, k)));
      }
      CHECK(first_pontryagin_from_curvature(model) == model.p1());
    }
    ChernRootModel empty(0, 4);
    CHECK(pontryagin_character_component(empty, 1).is_zero());
  }

  TEST_CASE("Newton identities agree with explicit roots") {
    NewtonTable t = power_sums_to_pontryagin(4);
    CHECK(t.s_in_p[0] == parse_element(t.algebra, "p1"));
    CHECK(t.s_in_p[1] == parse_element(t.algebra, "p1^2 - 2*p2"));
    CHECK(t.p_in_s[1] == parse_element(t.algebra, "(1/2)*s1^2 - (1/2)*s2"));
    std::vector<std::vector<Rational>> samples = {{1, 2, 3}, {rational(1, 2), -1, 4, 5}, {7}};
    for (const auto& y : samples) {
      std::map<std::string, Rational> pv, sv;
      for (int i = 1; i <= 4; ++i) {
        pv[pontryagin_name(i)] = elementary(y, i);
        sv[power_sum_name(i)] = power_sum(y, i);
      }
      for (int k = 1; k <= 4; ++k) {
        CHECK(evaluate(t.s_in_p[static_cast<std::size_t>(k) - 1], pv) == power_sum(y, k));
        CHECK(evaluate(t.p_in_s[static_cast<std::size_t>(k) - 1], sv) == elementary(y, k));
      }
    }
  }

  TEST_CASE("partitions") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partition_key({2, 1, 1}) == "2,1,1");
    CHECK(parse_partition("1,2") == Partition{2, 1});
    CHECK(canonical_partition({1, 3, 2}) == Partition{3, 2, 1});
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
  }

  TEST_CASE("descriptors parse, validate and round trip") {
    auto d = parse_descriptor(R"({dim: 8, pontryagin_numbers: {"1,1": "4", "2": "7"}})");
    CHECK(d.dim == 8);
    CHECK(d.number({1, 1}) == 4);
    CHECK(d.number({2}) == 7);
    CHECK(parse_descriptor(descriptor_to_yaml(d)).pontryagin_numbers == d.pontryagin_numbers);
    CHECK_THROWS_AS(parse_descriptor("{dim: 6}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor(R"({dim: 4, pontryagin_numbers: {"2": "1"}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("{dim: 4, pontryagin_numbers: [1]}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("dim: [}"), std::invalid_argument);
    auto partial = parse_descriptor(R"({dim: 8, pontryagin_numbers: {"2": "1"}})");
    CHECK_THROWS_AS(partial.number({1, 1}), MissingNumber);
  }

  TEST_CASE("integration against Pontryagin numbers") {
    NewtonTable t = power_sums_to_pontryagin(2);
    auto d4 = parse_descriptor(R"({dim: 4, pontryagin_numbers: {"1": "0"}})");
    CHECK(integrate_scalar(d4, parse_element(t.algebra, "p1")) == 0);
    auto d48 = parse_descriptor(R"({dim: 4, pontryagin_numbers: {"1": "48"}})");
    CHECK(integrate_scalar(d48, parse_element(t.algebra, "p1 + 3")) == 48);
    auto d8 = parse_descriptor(R"({dim: 8, pontryagin_numbers: {"1,1": "4", "2": "7"}})");
    // s2 = p1^2 - 2 p2
    CHECK(integrate_scalar(d8, t.s_in_p[1]) == -10);
    CHECK_THROWS_AS(integrate_scalar(d8, parse_element(t.algebra, "s1^2")), std::invalid_argument);
  }

  TEST_CASE("product descriptors follow the Whitney formula") {
    // CP2 has p1 = 3 h^2
    auto cp2 = parse_descriptor(R"({dim: 4, pontryagin_numbers: {"1": "3"}})");
    auto prod = product_descriptor(cp2, cp2);
    CHECK(prod.dim == 8);
    CHECK(prod.number({1, 1}) == 18);
    CHECK(prod.number({2}) == 9);
    auto point = parse_descriptor("{dim: 0}");
    auto same = product_descriptor(point, cp2);
    CHECK(same.number({1}) == 3);
  }
}
