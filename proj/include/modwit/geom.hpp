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

#include <map>
#include <string>
#include <vector>

#include "modwit/dga.hpp"
#include "modwit/matrix.hpp"

namespace modwit {

// Splitting-principle model with even roots x1..xr of form degree 2 and
// the block curvature diag([[0, 2 pi x_j], [-2 pi x_j, 0]]). The ambient
// algebra also carries the Eisenstein symbols G2..G2K (K = max(1, dim/4)),
// the Bott symbol b, the anomaly symbols u and j, and H with
// dH = x1^2 + ... + xr^2.
class ChernRootModel {
 public:
  ChernRootModel(int roots, int dim);

  int roots() const { return roots_; }
  int dim() const { return dim_; }
  int eisenstein_count() const { return kmax_; }
  const AlgebraPtr& algebra() const { return alg_; }

  Element<Rational> root(int j) const;  // 1-based
  Element<Rational> gen(const std::string& name) const { return Element<Rational>::generator(alg_, name); }
  // x1^2 + ... + xr^2
  Element<Rational> p1() const;

  template <class S>
  Matrix<Element<S>> curvature() const;

 private:
  int roots_;
  int dim_;
  int kmax_;
  AlgebraPtr alg_;
};

std::string root_name(int j);
std::string eisenstein_name(int k);  // "G2", "G4", ...

template <class S>
S two_pi();
template <>
inline GaussianPi two_pi<GaussianPi>() { return GaussianPi::pi() * GaussianPi(Rational(2)); }
template <>
Complex two_pi<Complex>();

template <class S>
S two_pi_i() {
  if constexpr (std::is_same_v<S, GaussianPi>) {
    return GaussianPi(GaussianRational{0, 2}, 1);
  } else {
    return two_pi<S>() * S(0.0, 1.0);
  }
}

template <class S>
Matrix<Element<S>> ChernRootModel::curvature() const {
  const std::size_t n = static_cast<std::size_t>(2 * roots_);
  Matrix<Element<S>> R(n, n, Element<S>(alg_));
  for (int j = 1; j <= roots_; ++j) {
    Element<S> x = lift<S>(root(j)).scaled(two_pi<S>());
    std::size_t a = static_cast<std::size_t>(2 * (j - 1));
    R(a, a + 1) = x;
    R(a + 1, a) = -x;
  }
  return R;
}

template <class T>
T trace(const Matrix<T>& M) {
  T acc = M(0, 0) - M(0, 0);
  for (std::size_t i = 0; i < M.rows(); ++i) acc = acc + M(i, i);
  return acc;
}

// Tr(R^{2k}) / (2k (2 pi i)^{2k}), evaluated with pi carried symbolically
// and projected back to rational coefficients.
Element<Rational> pontryagin_character_component(const ChernRootModel& model, int k);

// -Tr(R^2) / (8 pi^2), evaluated through the curvature matrix.
Element<Rational> first_pontryagin_from_curvature(const ChernRootModel& model);

// Newton rewrite table between power sums s_k = sum x_j^{2k} and the
// elementary symmetric p_i = e_i(x_1^2, ...). Both live in one algebra
// with generators p1..pK and s1..sK of form degree 4i.
struct NewtonTable {
  int k_max;
  AlgebraPtr algebra;
  std::vector<Element<Rational>> s_in_p;  // index k-1
  std::vector<Element<Rational>> p_in_s;  // index i-1
};

NewtonTable power_sums_to_pontryagin(int k_max);

using Partition = std::vector<int>;  // decreasing

Partition canonical_partition(Partition p);
std::string partition_key(const Partition& p);  // "2,1,1"
Partition parse_partition(const std::string& key);
std::vector<Partition> partitions_of(int n);

class MissingNumber : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ManifoldDescriptor {
  int dim = 0;
  std::map<Partition, Rational> pontryagin_numbers;

  void validate() const;
  // Number stored for the partition; the empty partition of a point is 1.
  Rational number(const Partition& p) const;
};

ManifoldDescriptor parse_descriptor(const std::string& yaml_text);
ManifoldDescriptor load_descriptor(const std::string& path);
std::string descriptor_to_yaml(const ManifoldDescriptor& d);

// Pontryagin numbers of the product, from p(X x Y) = p(X) p(Y).
ManifoldDescriptor product_descriptor(const ManifoldDescriptor& x, const ManifoldDescriptor& y);

std::string pontryagin_name(int i);  // "p1", ...
std::string power_sum_name(int i);   // "s1", ...

// Integrates the form-degree-dim component of a class written in the
// generators p1..pK of its algebra. Each top-degree monomial p_lambda * m
// contributes number(lambda) * m, where m collects the remaining
// (form-degree-0) generators.
template <class S>
Element<S> integrate(const ManifoldDescriptor& d, const Element<S>& cls) {
  d.validate();
  const AlgebraPtr& alg = cls.algebra();
  std::vector<int> pidx;
  for (int i = 1; 4 * i <= std::max(d.dim, 4); ++i) pidx.push_back(alg->index_of(pontryagin_name(i)));
  std::vector<typename Element<S>::Term> out;
  for (const auto& [m, c] : cls.terms()) {
    if (alg->form_degree(m) != d.dim) continue;
    Partition part;
    Monomial rest = m;
    for (std::size_t i = 0; i < pidx.size(); ++i) {
      if (pidx[i] < 0) continue;
      int e = m.e[static_cast<std::size_t>(pidx[i])];
      for (int k = 0; k < e; ++k) part.push_back(static_cast<int>(i) + 1);
      rest.e[static_cast<std::size_t>(pidx[i])] = 0;
    }
    if (alg->form_degree(rest) != 0) {
      throw std::invalid_argument("top-degree monomial " + alg->render_monomial(m) +
                                  " is not a Pontryagin monomial");
    }
    part = canonical_partition(part);
    out.emplace_back(rest, c * ScalarTraits<S>::from_rational(d.number(part)));
  }
  return Element<S>::from_terms(alg, std::move(out));
}

template <class S>
S integrate_scalar(const ManifoldDescriptor& d, const Element<S>& cls) {
  Element<S> r = integrate(d, cls);
  for (const auto& [m, c] : r.terms()) {
    if (!m.is_one()) throw std::invalid_argument("integral still depends on symbols; use integrate()");
  }
  return r.coefficient(Monomial{});
}

}  // namespace modwit
