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

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modwit/qseries.hpp"

namespace modwit {

class NoDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponents (a, b, c) of E2^a E4^b E6^c in the normalized series.
using QmMonomial = std::array<int, 3>;

struct QuasiModularPolynomial {
  int weight = 0;
  std::map<QmMonomial, Rational> terms;  // nonzero coefficients only

  bool is_zero() const { return terms.empty(); }
  bool involves_e2() const;
  // Terms with a positive E2 exponent.
  QuasiModularPolynomial e2_part() const;
  QuasiModularPolynomial without_e2() const;
  QSeries expand(int order) const;
  // "(1/1728)·E4^3 - (1/1728)·E6^2"; zero renders as "0".
  std::string render() const;
  bool operator==(const QuasiModularPolynomial&) const = default;
};

// Monomials E2^a E4^b E6^c of weight w, in decreasing E2 exponent.
std::vector<QmMonomial> quasi_modular_basis(int weight);

QSeries expand_monomial(const QmMonomial& m, int order);

// Exact solution of the coefficient-matching system; throws
// NoDecomposition when the system is inconsistent or the series has a
// pole, and std::invalid_argument when the order is too small to decide.
QuasiModularPolynomial quasi_modular_decompose(const QSeries& f);

}  // namespace modwit
