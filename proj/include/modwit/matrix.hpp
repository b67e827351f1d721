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

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "modwit/dga.hpp"

namespace modwit {

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix r(cols_, rows_, data_.front());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_, data_.front() - data_.front());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < o.cols_; ++j) {
        T acc = data_.front() - data_.front();
        for (std::size_t k = 0; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
        r(i, j) = acc;
      }
    }
    return r;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

// Ring helpers shared by scalar and algebra entries.
template <class T>
struct RingOps {
  static bool is_zero(const T& x) { return ScalarTraits<T>::is_zero(x); }
  static T zero_like(const T&) { return ScalarTraits<T>::zero(); }
  static T one_like(const T&) { return ScalarTraits<T>::one(); }
  static std::optional<T> unit_inverse(const T& x) { return ScalarTraits<T>::inverse(x); }
  static bool is_even(const T&) { return true; }
};

template <class S>
struct RingOps<Element<S>> {
  using E = Element<S>;
  static bool is_zero(const E& x) { return x.is_zero(); }
  static E zero_like(const E& x) { return E(x.algebra()); }
  static E one_like(const E& x) { return E::constant(x.algebra(), ScalarTraits<S>::one()); }
  static std::optional<E> unit_inverse(const E& x) { return try_inverse_unit(x); }
  static bool is_even(const E& x) { return x.is_even(); }
};

template <class T>
Matrix<T> identity_like(std::size_t n, const T& sample) {
  Matrix<T> r(n, n, RingOps<T>::zero_like(sample));
  for (std::size_t i = 0; i < n; ++i) r(i, i) = RingOps<T>::one_like(sample);
  return r;
}

template <class T>
void validate_skew(const Matrix<T>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("Pfaffian needs a square matrix");
  if (M.rows() % 2 != 0) throw std::invalid_argument("Pfaffian needs even size");
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (!RingOps<T>::is_zero(M(i, i))) throw std::invalid_argument("skew matrix has nonzero diagonal");
    for (std::size_t j = i + 1; j < M.cols(); ++j) {
      if (!RingOps<T>::is_zero(M(i, j) + M(j, i))) throw std::invalid_argument("matrix is not skew-symmetric");
      if (!RingOps<T>::is_even(M(i, j))) throw std::invalid_argument("skew matrix entries must be even");
    }
  }
}

namespace detail {

// Pf over the rows/columns in idx, expanding along the first index.
template <class T>
T pfaffian_expand(const Matrix<T>& M, std::vector<std::size_t>& idx) {
  const T& sample = M(0, 0);
  if (idx.empty()) return RingOps<T>::one_like(sample);
  std::size_t i0 = idx[0];
  T acc = RingOps<T>::zero_like(sample);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const T& a = M(i0, idx[k]);
    if (RingOps<T>::is_zero(a)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t l = 1; l < idx.size(); ++l) {
      if (l != k) rest.push_back(idx[l]);
    }
    T sub = pfaffian_expand(M, rest);
    if (k % 2 == 1) {
      acc = acc + a * sub;
    } else {
      acc = acc - a * sub;
    }
  }
  return acc;
}

template <class T>
void swap_index(Matrix<T>& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < M.rows(); ++k) std::swap(M(a, k), M(b, k));
  for (std::size_t k = 0; k < M.rows(); ++k) std::swap(M(k, a), M(k, b));
}

template <class T>
T determinant_expand(const Matrix<T>& M, std::vector<std::size_t>& cols, std::size_t row) {
  const T& sample = M(0, 0);
  if (cols.empty()) return RingOps<T>::one_like(sample);
  T acc = RingOps<T>::zero_like(sample);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const T& a = M(row, cols[k]);
    if (RingOps<T>::is_zero(a)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l != k) rest.push_back(cols[l]);
    }
    T sub = determinant_expand(M, rest, row + 1);
    if (k % 2 == 0) {
      acc = acc + a * sub;
    } else {
      acc = acc - a * sub;
    }
  }
  return acc;
}

}  // namespace detail

constexpr std::size_t kPfaffianExpansionLimit = 8;
constexpr std::size_t kDeterminantExpansionLimit = 4;

// Perfect-matching expansion up to size 8; above that, elimination on unit
// pivots, falling back to expansion when no unit pivot is available.
template <class T>
T pfaffian(const Matrix<T>& input) {
  validate_skew(input);
  const std::size_t n = input.rows();
  if (n == 0) throw std::invalid_argument("Pfaffian of an empty matrix is not defined here");
  if (n <= kPfaffianExpansionLimit) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return detail::pfaffian_expand(input, idx);
  }
  Matrix<T> M = input;
  T factor = RingOps<T>::one_like(M(0, 0));
  std::size_t size = n;
  // the active block is the trailing size x size corner
  while (size > kPfaffianExpansionLimit) {
    std::size_t base = n - size;
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = base; i < n && !pivot; ++i) {
      for (std::size_t j = i + 1; j < n && !pivot; ++j) {
        if (RingOps<T>::unit_inverse(M(i, j))) pivot = std::make_pair(i, j);
      }
    }
    if (!pivot) break;
    // a transposition of indices flips the sign of the Pfaffian
    if (pivot->first != base) {
      detail::swap_index(M, base, pivot->first);
      factor = RingOps<T>::zero_like(factor) - factor;
      if (pivot->second == base) pivot->second = pivot->first;
    }
    if (pivot->second != base + 1) {
      detail::swap_index(M, base + 1, pivot->second);
      factor = RingOps<T>::zero_like(factor) - factor;
    }
    T a = M(base, base + 1);
    T ainv = *RingOps<T>::unit_inverse(a);
    factor = factor * a;
    for (std::size_t i = base + 2; i < n; ++i) {
      for (std::size_t j = base + 2; j < n; ++j) {
        if (i == j) continue;
        // Pf(M) = a Pf(D + (c_i b_j - b_i c_j) / a), b = row base, c = row base+1
        T update = (M(base + 1, i) * M(base, j) - M(base, i) * M(base + 1, j)) * ainv;
        M(i, j) = M(i, j) + update;
      }
    }
    size -= 2;
  }
  std::size_t base = n - size;
  std::vector<std::size_t> idx;
  for (std::size_t i = base; i < n; ++i) idx.push_back(i);
  if (idx.empty()) return factor;
  return factor * detail::pfaffian_expand(M, idx);
}

// Laplace expansion up to size 4; above that, Gaussian elimination on unit
// pivots with expansion as the fallback.
template <class T>
T determinant(const Matrix<T>& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const std::size_t n = input.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix is not defined here");
  if (n <= kDeterminantExpansionLimit) {
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    return detail::determinant_expand(input, cols, 0);
  }
  Matrix<T> M = input;
  T factor = RingOps<T>::one_like(M(0, 0));
  std::size_t c = 0;
  for (; c + kDeterminantExpansionLimit < n; ++c) {
    std::optional<T> inv;
    std::size_t p = c;
    for (; p < n; ++p) {
      inv = RingOps<T>::unit_inverse(M(p, c));
      if (inv) break;
    }
    if (!inv) break;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(M(p, k), M(c, k));
      factor = RingOps<T>::zero_like(factor) - factor;
    }
    factor = factor * M(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (RingOps<T>::is_zero(M(r, c))) continue;
      T f = M(r, c) * *inv;
      for (std::size_t k = c; k < n; ++k) M(r, k) = M(r, k) - f * M(c, k);
    }
  }
  std::vector<std::size_t> cols;
  for (std::size_t k = c; k < n; ++k) cols.push_back(k);
  // expand the trailing block: rows c.., columns c..
  Matrix<T> tail(n - c, n - c, M(0, 0));
  for (std::size_t i = c; i < n; ++i) {
    for (std::size_t j = c; j < n; ++j) tail(i - c, j - c) = M(i, j);
  }
  std::vector<std::size_t> tcols(n - c);
  std::iota(tcols.begin(), tcols.end(), 0);
  return factor * detail::determinant_expand(tail, tcols, 0);
}

}  // namespace modwit
