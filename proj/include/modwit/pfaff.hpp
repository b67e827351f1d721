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

#include "modwit/geom.hpp"
#include "modwit/lattice.hpp"
#include "modwit/matrix.hpp"

namespace modwit {

enum class BlockRoute { kDeterminant, kPfaffianRatio };
enum class ModePairing { kSymmetric, kPositiveOnly };

// Normalized block factors det(Id + b R / (2 pi i w)) for w = n tau - m.
template <class S>
class BlockFactory {
 public:
  BlockFactory(const ChernRootModel& model, const S& tau)
      : alg_(model.algebra()),
        tau_(tau),
        bR_(model.curvature<S>()),
        id_(identity_like(bR_.rows(), Element<S>(alg_))) {
    Element<S> b = Element<S>::generator(alg_, "b");
    for (std::size_t i = 0; i < bR_.rows(); ++i) {
      for (std::size_t j = 0; j < bR_.cols(); ++j) bR_(i, j) = b * bR_(i, j);
    }
  }

  S w(const LatticePoint& p) const { return lattice_value(p, tau_); }

  Element<S> one() const { return Element<S>::constant(alg_, ScalarTraits<S>::one()); }

  Element<S> block(const LatticePoint& p, BlockRoute route = BlockRoute::kDeterminant) const {
    if (bR_.rows() == 0) return one();
    S scale = two_pi_i<S>() * w(p);
    auto inv = ScalarTraits<S>::inverse(scale);
    if (!inv) throw std::domain_error("block with n tau - m = 0");
    if (route == BlockRoute::kDeterminant) {
      Matrix<Element<S>> A = id_;
      for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
          if (!bR_(i, j).is_zero()) A(i, j) = A(i, j) + bR_(i, j).scaled(*inv);
        }
      }
      return determinant(A);
    }
    // Pf([[0, A], [-A^T, 0]]) with A = 2 pi i w Id + b R, against R = 0
    return pfaffian(skew_block(scale, true)) * inverse_unit(pfaffian(skew_block(scale, false)));
  }

 private:
  Matrix<Element<S>> skew_block(const S& scale, bool with_curvature) const {
    const std::size_t d = bR_.rows();
    Matrix<Element<S>> M(2 * d, 2 * d, Element<S>(alg_));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Element<S> a = (i == j) ? Element<S>::constant(alg_, scale) : Element<S>(alg_);
        if (with_curvature) a = a + bR_(i, j);
        M(i, d + j) = a;
        M(d + j, i) = -a;
      }
    }
    return M;
  }

  AlgebraPtr alg_;
  S tau_;
  Matrix<Element<S>> bR_;
  Matrix<Element<S>> id_;
};

template <class S>
Element<S> block_norm_pfaffian(const ChernRootModel& model, const BlockIndex& idx, const S& tau,
                               BlockRoute route = BlockRoute::kDeterminant) {
  return BlockFactory<S>(model, tau).block(idx.point(), route);
}

// prod over the Z^2_+ points of the ordering of
// [block(p) block(-p)]^{-1}, the Witten-normalized regularized product.
template <class S>
Element<S> regularized_product(const ChernRootModel& model, const LatticeOrdering& ordering, const S& tau,
                               BlockRoute route = BlockRoute::kDeterminant) {
  BlockFactory<S> f(model, tau);
  Element<S> prod = f.one();
  ordering.for_each_z2plus([&](const LatticePoint& p) { prod = prod * (f.block(p, route) * f.block(-p, route)); });
  return inverse_unit(prod);
}

// prod over the Z^2_+ points of the ordering of block(p).
template <class S>
Element<S> renormalized_pfaffian(const ChernRootModel& model, const LatticeOrdering& ordering, const S& tau) {
  BlockFactory<S> f(model, tau);
  Element<S> prod = f.one();
  ordering.for_each_z2plus([&](const LatticePoint& p) { prod = prod * f.block(p); });
  return prod;
}

// sum_k b^{2k} Tr(R^{2k}) P_{2k} / ((2 pi i)^{2k} 2k), with P_{2k} the
// raw lattice sum of w^{-2k} over the symmetrized index set.
template <class S>
Element<S> lattice_exponent(const ChernRootModel& model, const LatticeOrdering& ordering, const S& tau) {
  const AlgebraPtr& alg = model.algebra();
  Element<S> acc(alg);
  if (model.roots() == 0) return acc;
  auto R = model.curvature<S>();
  Matrix<Element<S>> P = identity_like(R.rows(), Element<S>(alg));
  Matrix<Element<S>> R2 = R * R;
  for (int k = 1; 4 * k <= model.dim(); ++k) {
    P = P * R2;
    S denom = ScalarTraits<S>::from_rational(Rational(2 * k)) * power_of(two_pi_i<S>(), 2 * k);
    S coef = *ScalarTraits<S>::inverse(denom) * lattice_partial_sum<S>(2 * k, tau, ordering);
    acc += (Element<S>::generator(alg, "b").pow(2 * k) * trace(P)).scaled(coef);
  }
  return acc;
}

template <class S>
Element<S> lattice_exponential(const ChernRootModel& model, const LatticeOrdering& ordering, const S& tau) {
  return exp_nilpotent(lattice_exponent(model, ordering, tau));
}

// prod_{n=1}^{N} of the inverse mode factors det(Id + X_n) det(Id - X_n)
// (or det(Id + X_n) alone), X_n = R / ((2 pi i)(2 pi i n)) so that the
// curvature enters through its Chern-Weil normalization R / (2 pi i).
Element<Complex> a_hat_product(const ChernRootModel& model, long mode_bound,
                               ModePairing pairing = ModePairing::kSymmetric);

// prod_j [(x_j/2) / sinh(x_j/2)]^{power} from the Taylor series of
// sinh(z/2)/(z/2), inverted in the algebra.
Element<Rational> a_hat_taylor(const ChernRootModel& model, int power);

}  // namespace modwit
