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

#include <complex>
#include <string>
#include <vector>

#include "modwit/rational.hpp"

namespace modwit {

// Truncated Laurent series in q with exact rational coefficients and a
// modular weight. Coefficients are known for exponents below order(); a
// series with order() == kExact is a finite expression such as a constant.
// The zero series is compatible with every weight under addition.
class QSeries {
 public:
  static constexpr int kExact = 1 << 28;

  QSeries() = default;
  QSeries(int weight, int min_exp, std::vector<Rational> coeffs, int order);

  static QSeries constant(const Rational& c, int weight = 0);
  static QSeries monomial(const Rational& c, int exponent, int weight, int order);

  int weight() const { return weight_; }
  int min_exp() const { return min_exp_; }
  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coefficient(int exponent) const;
  QSeries with_weight(int w) const;
  QSeries truncated(int order) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }

  // Equality up to the smaller of the two orders.
  bool operator==(const QSeries& o) const;

  QSeries inverse() const;
  QSeries pow(int e) const;

  std::complex<double> evaluate(std::complex<double> q) const;

  // "1 + 240 q + 2160 q^2"; zero renders as "0".
  std::string render() const;

 private:
  void normalize();

  int weight_ = 0;
  int min_exp_ = 0;
  std::vector<Rational> coeffs_;
  int order_ = kExact;
};

}  // namespace modwit
