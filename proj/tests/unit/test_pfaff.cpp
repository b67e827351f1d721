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

#include "../support/oracles.hpp"
#include "modwit/pfaff.hpp"
#include "modwit/witten.hpp"

using namespace modwit;

namespace {

Matrix<Rational> to_matrix(const std::vector<std::vector<oracle::Q>>& a) {
  Matrix<Rational> M(a.size(), a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) M(i, j) = a[i][j];
  }
  return M;
}

Monomial mono(const ChernRootModel& model, std::initializer_list<std::pair<const char*, int>> powers) {
  Monomial m;
  for (auto [name, e] : powers) m.e[static_cast<std::size_t>(model.algebra()->require(name))] = static_cast<int8_t>(e);
  return m;
}

}  // namespace

TEST_SUITE("pfaff") {
  TEST_CASE("Pfaffian against the perfect-matching expansion") {
    std::mt19937_64 rng(1);
    for (std::size_t n : {2u, 4u, 6u, 8u, 10u}) {
      for (int trial = 0; trial < 8; ++trial) {
        auto a = oracle::random_skew(n, rng);
        Matrix<Rational> M = to_matrix(a);
        Rational pf = pfaffian(M);
        CHECK(pf == oracle::pfaffian(a));
        CHECK(pf * pf == oracle::determinant(a));
        CHECK(determinant(M) == oracle::determinant(a));
      }
    }
    // odd size is rejected; its determinant vanishes
    auto odd = oracle::random_skew(5, rng);
    CHECK_THROWS_AS(pfaffian(to_matrix(odd)), std::invalid_argument);
    CHECK(determinant(to_matrix(odd)) == 0);
  }

  TEST_CASE("Pfaffian of a congruent matrix") {
    std::mt19937_64 rng(2);
    for (std::size_t n : {4u, 6u, 10u}) {
      auto a = oracle::random_skew(n, rng);
      auto g = oracle::random_square(n, rng);
      Matrix<Rational> M = to_matrix(a), G = to_matrix(g);
      Matrix<Rational> C = G.transpose() * M * G;
      CHECK(pfaffian(C) == oracle::determinant(g) * pfaffian(M));
    }
  }

  TEST_CASE("Pfaffian of the block matrix [[0, A], [-A^T, 0]]") {
    std::mt19937_64 rng(3);
    for (std::size_t d = 1; d <= 4; ++d) {
      auto a = oracle::random_square(d, rng);
      Matrix<Rational> B(2 * d, 2 * d, Rational(0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          B(i, d + j) = a[i][j];
          B(d + j, i) = -a[i][j];
        }
      }
      int sign = (d * (d - 1) / 2) % 2 ? -1 : 1;
      CHECK(pfaffian(B) == sign * oracle::determinant(a));
    }
  }

  TEST_CASE("skew-symmetry is required") {
    Matrix<Rational> M(2, 2, Rational(0));
    M(0, 1) = 1;
    M(1, 0) = 1;
    CHECK_THROWS_AS(pfaffian(M), std::invalid_argument);
    Matrix<Rational> R(2, 3, Rational(0));
    CHECK_THROWS_AS(determinant(R), std::invalid_argument);
  }

  TEST_CASE("Pfaffians over the graded algebra") {
    ChernRootModel model(2, 8);
    auto R = model.curvature<GaussianPi>();
    Element<GaussianPi> pf = pfaffian(R);
    // Pf of diag(2 pi x_j J) = (2 pi)^2 x1 x2
    auto expected = lift<GaussianPi>(model.root(1) * model.root(2)).scaled(two_pi<GaussianPi>() * two_pi<GaussianPi>());
    CHECK(pf == expected);
    CHECK(pf * pf == determinant(R));
  }

  TEST_CASE("the two block routes agree") {
    ChernRootModel model(2, 8);
    GaussianPi tau(GaussianRational{Rational(1, 3), 2});
    for (auto p : {BlockIndex(1, 0), BlockIndex(0, -1), BlockIndex(-2, -1), BlockIndex(3, -2)}) {
      auto det = block_norm_pfaffian(model, p, tau, BlockRoute::kDeterminant);
      auto pfr = block_norm_pfaffian(model, p, tau, BlockRoute::kPfaffianRatio);
      CHECK(det == pfr);
    }
  }

  TEST_CASE("regularized product equals the exponential of lattice sums") {
    GaussianPi tau(GaussianRational{0, 2});
    for (int r = 1; r <= 2; ++r) {
      ChernRootModel model(r, 8);
      for (long bound = 1; bound <= 2; ++bound) {
        auto ord = LatticeOrdering::symmetric_shells(bound);
        auto prod = regularized_product(model, ord, tau);
        CHECK(prod == lattice_exponential(model, ord, tau));
        // the unpaired product is the square root of the inverse
        auto half = renormalized_pfaffian(model, ord, tau);
        auto expo = lattice_exponent(model, ord, tau);
        CHECK(half == exp_nilpotent(expo.scaled(GaussianPi(rational(-1, 2)))));
        CHECK(half * half * prod == Element<GaussianPi>::constant(model.algebra(), Rational(1)));
      }
    }
  }

  TEST_CASE("the Witten class with raw lattice sums reproduces the product") {
    // G_{2k} -> P_{2k}, the raw partial sums, turns the symbolic class into
    // the finite product over the same lattice points.
    GaussianPi tau(GaussianRational{0, 2});
    ChernRootModel model(1, 8);
    auto ord = LatticeOrdering::symmetric_shells(2);
    auto wit = lift<GaussianPi>(witten_class_symbolic(model));
    std::map<std::string, GaussianPi> values;
    for (int k = 1; k <= model.eisenstein_count(); ++k) {
      values[eisenstein_name(k)] = lattice_partial_sum<GaussianPi>(2 * k, tau, ord);
    }
    CHECK(specialize<GaussianPi>(wit, values) == regularized_product(model, ord, tau));
  }

  TEST_CASE("complex mode tracks the exact mode") {
    ChernRootModel model(1, 4);
    auto ord = LatticeOrdering::symmetric_shells(3);
    auto exact = regularized_product(model, ord, GaussianPi(GaussianRational{0, 2}));
    auto fl = regularized_product(model, ord, Complex(0.0, 2.0));
    Monomial m = mono(model, {{"b", 2}, {"x1", 2}});
    CHECK(std::abs(exact.coefficient(m).to_complex() - fl.coefficient(m)) < 1e-12);
  }

  TEST_CASE("A-hat Taylor oracle") {
    ChernRootModel model(1, 16);
    auto a = a_hat_taylor(model, 1);
    for (int n = 0; n <= 4; ++n) {
      CHECK(a.coefficient(mono(model, {{"x1", 2 * n}})) == oracle::half_x_over_sinh(n));
    }
    ChernRootModel two(2, 8);
    CHECK(a_hat_taylor(two, 2) == a_hat_taylor(two, 1) * a_hat_taylor(two, 1));
  }

  TEST_CASE("circle-mode product reproduces the A-hat class") {
    ChernRootModel model(1, 4);
    auto sym = a_hat_product(model, 20000, ModePairing::kSymmetric);
    auto pos = a_hat_product(model, 20000, ModePairing::kPositiveOnly);
    Monomial m = mono(model, {{"x1", 2}});
    double target_sym = a_hat_taylor(model, 2).coefficient(m).get_d();
    double target_pos = a_hat_taylor(model, 1).coefficient(m).get_d();
    CHECK(std::abs(sym.coefficient(m) - target_sym) < 1e-4);
    CHECK(std::abs(pos.coefficient(m) - target_pos) < 1e-4);
    CHECK_THROWS_AS(a_hat_product(model, 0), std::invalid_argument);
  }
}
