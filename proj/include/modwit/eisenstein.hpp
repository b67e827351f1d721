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

#include "modwit/lattice.hpp"
#include "modwit/qseries.hpp"

namespace modwit {

struct GammaElement {
  long a, b, c, d;

  GammaElement(long a_, long b_, long c_, long d_);
  static GammaElement identity() { return {1, 0, 0, 1}; }
  static GammaElement T() { return {1, 1, 0, 1}; }
  static GammaElement S() { return {0, -1, 1, 0}; }
  GammaElement operator*(const GammaElement& o) const;
  Complex apply(Complex tau) const;
  Complex automorphy(Complex tau) const { return static_cast<double>(c) * tau + static_cast<double>(d); }
};

// Normalized series with constant term 1:
// 1 - (4k / B_{2k}) sum_{n >= 1} sigma_{2k-1}(n) q^n, weight 2k.
QSeries eisenstein_q(int k, int order);

// The lattice sum divided by (2 pi i)^{2k}: -(B_{2k} / (2k)!) times the
// normalized series. Coefficients stay rational.
QSeries eisenstein_hat(int k, int order);

// Value of the q-expansion at q = exp(2 pi i tau).
Complex evaluate_at_tau(const QSeries& f, Complex tau);

// 2 zeta(2k) in floating point.
double two_zeta(int k);

// Partial sum of (n tau - m)^{-2k} over the index set of the ordering.
// Row-major orderings with complete_rows add the tail of every row.
Complex eisenstein_lattice(int k, Complex tau, const LatticeOrdering& ordering);

// Default ordering: completed rows for k = 1, symmetric shells otherwise.
LatticeOrdering default_ordering(int k, long bound);

// E(g tau) - (c tau + d)^{2k} E(tau) - anomaly, with anomaly
// -2 pi i c (c tau + d) for k = 1 and 0 otherwise.
Complex transform_residual(int k, const GammaElement& g, Complex tau, const LatticeOrdering& ordering);
Complex transform_residual(int k, const GammaElement& g, Complex tau, long bound);

}  // namespace modwit
