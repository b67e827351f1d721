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

#include <string>

#include "modwit/geom.hpp"
#include "modwit/quasimodular.hpp"

namespace modwit {

// exp(sum_k ph(k) b^{2k} G_{2k}) with the Eisenstein symbols kept formal.
Element<Rational> witten_class_symbolic(const ChernRootModel& model);

// Values -B_{2k}/(2k)! Ê... of the Eisenstein symbols: the series
// E_{2k}^{lat} / (2 pi i)^{2k} truncated at q_order.
std::map<std::string, QSeries> eisenstein_symbol_values(int kmax, int q_order);

// The class with G_{2k} replaced by the q-series, truncated at q_order.
Element<QSeries> witten_class(const ChernRootModel& model, int q_order);

// Constant term in q with b = 1: G_{2k} -> -B_{2k}/(2k)!.
Element<Rational> witten_class_q0(const ChernRootModel& model);

// Genus as a polynomial in the Eisenstein symbols: integrate the class
// written in power sums, rewritten to Pontryagin classes, with b = 1.
// Asserts that every monomial has Eisenstein weight dim/2.
Element<Rational> witten_genus_symbolic(const ManifoldDescriptor& d);

QSeries witten_genus(const ManifoldDescriptor& d, int q_order);

// The transformation b -> b/j, G2 -> j^2 (G2 - u), G_{2k} -> j^{2k} G_{2k}
// applied to an element of the model algebra.
Element<Rational> modular_transform(const ChernRootModel& model, const Element<Rational>& a);

// Wit - transform(Wit), symbolic and with G_{2k} evaluated.
Element<Rational> anomaly_delta_symbolic(const ChernRootModel& model);
Element<QSeries> anomaly_delta(const ChernRootModel& model, int q_order);

// (1 - exp(-P b^2 u)) / P with P -> p1, computed by exact division.
Element<Rational> anomaly_kernel(const ChernRootModel& model);

// A = H * Wit * (1 - exp(-p1 b^2 u)) / p1.
Element<Rational> anomaly_primitive_symbolic(const ChernRootModel& model);
Element<QSeries> anomaly_primitive(const ChernRootModel& model, int q_order);

struct AnomalyCheck {
  bool symbolic_ok = false;
  bool series_ok = false;
  bool vanishes_mod_p1 = false;
  std::string delta;
  std::string primitive;
  bool ok() const { return symbolic_ok && series_ok && vanishes_mod_p1; }
};

AnomalyCheck verify_anomaly(const ChernRootModel& model, int q_order);

struct StringReport {
  int weight = 0;
  QSeries genus;
  QuasiModularPolynomial decomposition;
  QuasiModularPolynomial e2_part;
  bool modular = false;
  // Symbolic genus re-expressed through the normalized series; must equal
  // the decomposition.
  bool symbolic_agrees = false;
  std::string verdict() const { return modular ? "modular" : "quasi-modular"; }
};

StringReport string_modularity_check(const ManifoldDescriptor& d, int q_order);

// Converts a polynomial in G2, G4, G6 (the lattice-normalized symbols) to
// the normalized E2, E4, E6 basis.
QuasiModularPolynomial to_normalized_basis(const Element<Rational>& genus_symbolic, int weight);

}  // namespace modwit
