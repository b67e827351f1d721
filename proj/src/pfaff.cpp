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

#include "modwit/pfaff.hpp"

#include <numbers>

namespace modwit {

Element<Complex> a_hat_product(const ChernRootModel& model, long mode_bound, ModePairing pairing) {
  if (mode_bound < 1) throw std::invalid_argument("mode bound must be positive");
  const AlgebraPtr& alg = model.algebra();
  Element<Complex> prod = Element<Complex>::constant(alg, 1.0);
  if (model.roots() == 0) return prod;
  auto R = model.curvature<Complex>();
  const Complex two_pi_i_c(0.0, 2.0 * std::numbers::pi);
  const std::size_t d = R.rows();
  Matrix<Element<Complex>> id = identity_like(d, Element<Complex>(alg));
  for (long n = 1; n <= mode_bound; ++n) {
    Complex scale = 1.0 / (two_pi_i_c * two_pi_i_c * static_cast<double>(n));
    Matrix<Element<Complex>> plus = id;
    Matrix<Element<Complex>> minus = id;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (R(i, j).is_zero()) continue;
        Element<Complex> x = R(i, j).scaled(scale);
        plus(i, j) = plus(i, j) + x;
        minus(i, j) = minus(i, j) - x;
      }
    }
    Element<Complex> factor = determinant(plus);
    if (pairing == ModePairing::kSymmetric) factor = factor * determinant(minus);
    prod = prod * factor;
  }
  return inverse_unit(prod);
}

Element<Rational> a_hat_taylor(const ChernRootModel& model, int power) {
  const AlgebraPtr& alg = model.algebra();
  Element<Rational> result = Element<Rational>::constant(alg, 1);
  for (int j = 1; j <= model.roots(); ++j) {
    Element<Rational> x = model.root(j);
    // sinh(z/2)/(z/2) = sum_n z^{2n} / (4^n (2n+1)!)
    Element<Rational> series = Element<Rational>::constant(alg, 1);
    Element<Rational> x2n = Element<Rational>::constant(alg, 1);
    Rational four_n = 1;
    for (int n = 1; 4 * n <= alg->truncation_degree(); ++n) {
      x2n = x2n * x * x;
      four_n *= 4;
      series += x2n.scaled(Rational(1) / (four_n * Rational(factorial(2 * n + 1))));
    }
    Element<Rational> inv = inverse_unit(series);
    for (int p = 0; p < power; ++p) result = result * inv;
  }
  return result;
}

}  // namespace modwit
