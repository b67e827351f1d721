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

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "modwit/scalar.hpp"

namespace modwit {

// Point of Z^2 labelling the lattice vector w = n*tau - m.
struct LatticePoint {
  long n = 0;
  long m = 0;

  LatticePoint operator-() const { return {-n, -m}; }
  bool operator==(const LatticePoint&) const = default;
  // Z^2_+ = {m < 0} u {m = 0, n > 0}.
  bool in_z2plus() const { return m < 0 || (m == 0 && n > 0); }
};

// Index (n, m) of a block of the regularized Pfaffian; always in Z^2_+.
struct BlockIndex {
  long n;
  long m;

  BlockIndex(long n_, long m_) : n(n_), m(m_) {
    if (!LatticePoint{n, m}.in_z2plus()) {
      throw std::invalid_argument("block index (" + std::to_string(n) + ", " + std::to_string(m) +
                                  ") is not in Z^2_+");
    }
  }
  LatticePoint point() const { return {n, m}; }
};

class LatticeOrdering {
 public:
  enum class Kind { kSymmetricShells, kPaperZ2Plus, kRowMajor };

  // All points with max(|n|, |m|) <= bound, shell by shell.
  static LatticeOrdering symmetric_shells(long bound);
  // Points of Z^2_+ with max(|n|, |m|) <= bound, shell by shell.
  static LatticeOrdering paper_z2plus(long bound);
  // Rows indexed by the tau-coefficient n, |n| <= rows; inside a row the
  // shift m runs over |m| <= cols. With complete_rows each row is summed
  // over the full m-range (finite part plus an asymptotic tail).
  static LatticeOrdering row_major(long rows, long cols, bool complete_rows = true);

  static LatticeOrdering parse(const std::string& name, long bound);

  Kind kind() const { return kind_; }
  long bound() const { return bound_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }
  bool complete_rows() const { return complete_; }
  std::string name() const;
  std::string describe() const;

  // Visits the points of Z^2_+ in the index set in enumeration order.
  template <class F>
  void for_each_z2plus(F&& f) const;

  // Visits every nonzero point of the index set, each +p immediately
  // followed by -p.
  template <class F>
  void for_each_pair(F&& f) const {
    for_each_z2plus([&](const LatticePoint& p) { f(p, -p); });
  }

  std::size_t z2plus_count() const;

 private:
  LatticeOrdering(Kind k, long bound, long rows, long cols, bool complete)
      : kind_(k), bound_(bound), rows_(rows), cols_(cols), complete_(complete) {}

  Kind kind_;
  long bound_;
  long rows_;
  long cols_;
  bool complete_;
};

template <class F>
void LatticeOrdering::for_each_z2plus(F&& f) const {
  if (kind_ == Kind::kRowMajor) {
    // row n = 0 contributes m < 0; rows n != 0 contribute m < 0 and, for
    // n > 0, the single point m = 0
    for (long n = -rows_; n <= rows_; ++n) {
      for (long m = -cols_; m <= 0; ++m) {
        LatticePoint p{n, m};
        if (p.in_z2plus()) f(p);
      }
    }
    return;
  }
  for (long s = 1; s <= bound_; ++s) {
    // the Z^2_+ half of the shell max(|n|, |m|) = s
    for (long n = -s; n <= s; ++n) f(LatticePoint{n, -s});
    for (long m = -s + 1; m <= -1; ++m) {
      f(LatticePoint{-s, m});
      f(LatticePoint{s, m});
    }
    f(LatticePoint{s, 0});
  }
}

inline Complex lattice_value(const LatticePoint& p, Complex tau) {
  return static_cast<double>(p.n) * tau - static_cast<double>(p.m);
}

inline GaussianPi lattice_value(const LatticePoint& p, const GaussianPi& tau) {
  return tau * GaussianPi(Rational(p.n)) - GaussianPi(Rational(p.m));
}

template <class S>
S power_of(const S& x, int e) {
  S r = ScalarTraits<S>::one();
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

// Raw partial sum of w^{-power} over the index set of the ordering, taken
// pairwise (+p, -p) in enumeration order; no completion of rows.
template <class S>
S lattice_partial_sum(int power, const S& tau, const LatticeOrdering& ordering) {
  S acc = ScalarTraits<S>::zero();
  ordering.for_each_pair([&](const LatticePoint& p, const LatticePoint& q) {
    auto a = ScalarTraits<S>::inverse(lattice_value(p, tau));
    auto b = ScalarTraits<S>::inverse(lattice_value(q, tau));
    if (!a || !b) throw std::domain_error("lattice point with w = 0");
    acc = acc + (power_of(*a, power) + power_of(*b, power));
  });
  return acc;
}

}  // namespace modwit
