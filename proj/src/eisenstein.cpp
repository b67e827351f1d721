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

#include "modwit/eisenstein.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modwit {

GammaElement::GammaElement(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
  if (a * d - b * c != 1) throw std::invalid_argument("matrix is not in SL2(Z)");
}

GammaElement GammaElement::operator*(const GammaElement& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Complex GammaElement::apply(Complex tau) const {
  return (static_cast<double>(a) * tau + static_cast<double>(b)) / automorphy(tau);
}

QSeries eisenstein_q(int k, int order) {
  if (k < 1) throw std::invalid_argument("Eisenstein index k must be positive");
  if (order < 1) throw std::invalid_argument("q-order must be positive");
  Rational factor = Rational(-4 * k) / bernoulli(2 * k);
  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (int n = 1; n < order; ++n) c[n] = factor * Rational(divisor_sigma(2 * k - 1, n));
  return QSeries(2 * k, 0, std::move(c), order);
}

QSeries eisenstein_hat(int k, int order) {
  Rational scale = -bernoulli(2 * k) / Rational(factorial(2 * k));
  return eisenstein_q(k, order) * scale;
}

Complex evaluate_at_tau(const QSeries& f, Complex tau) {
  return f.evaluate(std::exp(Complex(0.0, 2.0 * std::numbers::pi) * tau));
}

double two_zeta(int k) {
  // 2 zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2k)!
  Rational b = bernoulli(2 * k) / Rational(factorial(2 * k));
  double sign = (k % 2 == 1) ? 1.0 : -1.0;
  return sign * b.get_d() * std::pow(2.0 * std::numbers::pi, 2 * k);
}

namespace {

void check_tau(Complex tau) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("tau must lie in the upper half plane");
}

Complex inv_pow(Complex w, int p) {
  Complex inv = 1.0 / w;
  Complex r = 1.0;
  for (int i = 0; i < p; ++i) r *= inv;
  return r;
}

// sum_{e > N} (z + e)^{-p} by Euler-Maclaurin at x = N.
Complex row_tail(Complex z, long N, int p) {
  Complex base = z + static_cast<double>(N);
  Complex integral = inv_pow(base, p - 1) / static_cast<double>(p - 1);
  Complex f0 = inv_pow(base, p);
  // derivatives of (z + x)^{-p}
  auto deriv = [&](int j) {
    double coef = 1.0;
    for (int i = 0; i < j; ++i) coef *= -(p + i);
    return coef * inv_pow(base, p + j);
  };
  return integral - 0.5 * f0 - deriv(1) / 12.0 + deriv(3) / 720.0 - deriv(5) / 30240.0 +
         deriv(7) / 1209600.0;
}

Complex completed_row(long n, Complex tau, long cols, int p) {
  Complex z = static_cast<double>(n) * tau;
  Complex acc = 0.0;
  for (long m = 1; m <= cols; ++m) {
    acc += inv_pow(z - static_cast<double>(m), p) + inv_pow(z + static_cast<double>(m), p);
  }
  if (n != 0) acc += inv_pow(z, p);
  // the tails are sum_{m > cols} (z - m)^{-p} and (z + m)^{-p}; with p even
  // (z - m)^{-p} = (-z + m)^{-p}
  acc += row_tail(z, cols, p) + row_tail(-z, cols, p);
  return acc;
}

}  // namespace

Complex eisenstein_lattice(int k, Complex tau, const LatticeOrdering& ordering) {
  if (k < 1) throw std::invalid_argument("Eisenstein index k must be positive");
  check_tau(tau);
  int p = 2 * k;
  if (ordering.kind() == LatticeOrdering::Kind::kRowMajor && ordering.complete_rows()) {
    Complex acc = completed_row(0, tau, ordering.cols(), p);
    for (long n = 1; n <= ordering.rows(); ++n) {
      acc += completed_row(n, tau, ordering.cols(), p) + completed_row(-n, tau, ordering.cols(), p);
    }
    return acc;
  }
  Complex acc = 0.0;
  ordering.for_each_pair([&](const LatticePoint& a, const LatticePoint& b) {
    acc += inv_pow(lattice_value(a, tau), p) + inv_pow(lattice_value(b, tau), p);
  });
  return acc;
}

LatticeOrdering default_ordering(int k, long bound) {
  if (k == 1) return LatticeOrdering::row_major(bound, bound, true);
  return LatticeOrdering::symmetric_shells(bound);
}

Complex transform_residual(int k, const GammaElement& g, Complex tau, const LatticeOrdering& ordering) {
  check_tau(tau);
  Complex j = g.automorphy(tau);
  Complex lhs = eisenstein_lattice(k, g.apply(tau), ordering);
  Complex rhs = std::pow(j, 2 * k) * eisenstein_lattice(k, tau, ordering);
  if (k == 1) rhs += Complex(0.0, -2.0 * std::numbers::pi) * static_cast<double>(g.c) * j;
  return lhs - rhs;
}

Complex transform_residual(int k, const GammaElement& g, Complex tau, long bound) {
  return transform_residual(k, g, tau, default_ordering(k, bound));
}

}  // namespace modwit
