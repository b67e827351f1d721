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

#include "modwit/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modwit {

namespace {

int clamp_order(long v) {
  if (v >= QSeries::kExact) return QSeries::kExact;
  if (v <= -QSeries::kExact) return -QSeries::kExact;
  return static_cast<int>(v);
}

}  // namespace

QSeries::QSeries(int weight, int min_exp, std::vector<Rational> coeffs, int order)
    : weight_(weight), min_exp_(min_exp), coeffs_(std::move(coeffs)), order_(clamp_order(order)) {
  normalize();
}

QSeries QSeries::constant(const Rational& c, int weight) {
  return QSeries(weight, 0, {c}, kExact);
}

QSeries QSeries::monomial(const Rational& c, int exponent, int weight, int order) {
  return QSeries(weight, exponent, {c}, order);
}

void QSeries::normalize() {
  long keep = static_cast<long>(order_) - min_exp_;
  if (keep < static_cast<long>(coeffs_.size())) {
    coeffs_.resize(keep < 0 ? 0 : static_cast<std::size_t>(keep));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<int>(lead);
  }
}

Rational QSeries::coefficient(int exponent) const {
  if (exponent >= order_) throw std::out_of_range("coefficient beyond the series order");
  long i = static_cast<long>(exponent) - min_exp_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

QSeries QSeries::with_weight(int w) const {
  QSeries r = *this;
  r.weight_ = w;
  return r;
}

QSeries QSeries::truncated(int order) const {
  QSeries r = *this;
  r.order_ = std::min(order_, clamp_order(order));
  r.normalize();
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (!is_zero() && !o.is_zero() && weight_ != o.weight_) {
    throw std::domain_error("adding q-series of weights " + std::to_string(weight_) + " and " +
                            std::to_string(o.weight_));
  }
  if (is_zero()) weight_ = o.weight_;
  int order = std::min(order_, o.order_);
  if (o.is_zero()) {
    order_ = order;
    normalize();
    return *this;
  }
  if (is_zero()) {
    coeffs_ = o.coeffs_;
    min_exp_ = o.min_exp_;
    order_ = order;
    normalize();
    return *this;
  }
  int lo = std::min(min_exp_, o.min_exp_);
  int hi = std::max(min_exp_ + static_cast<int>(coeffs_.size()),
                    o.min_exp_ + static_cast<int>(o.coeffs_.size()));
  hi = std::min(hi, order);
  std::vector<Rational> out(hi > lo ? static_cast<std::size_t>(hi - lo) : 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    long e = min_exp_ + static_cast<long>(i);
    if (e < hi) out[static_cast<std::size_t>(e - lo)] += coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    long e = o.min_exp_ + static_cast<long>(i);
    if (e < hi) out[static_cast<std::size_t>(e - lo)] += o.coeffs_[i];
  }
  coeffs_ = std::move(out);
  min_exp_ = lo;
  order_ = order;
  normalize();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const QSeries& o) {
  long va = is_zero() ? 0 : min_exp_;
  long vb = o.is_zero() ? 0 : o.min_exp_;
  long order_a = order_ >= kExact ? static_cast<long>(kExact) * 4 : order_ + vb;
  long order_b = o.order_ >= kExact ? static_cast<long>(kExact) * 4 : o.order_ + va;
  int order = clamp_order(std::min(order_a, order_b));
  int weight = weight_ + o.weight_;
  if (is_zero() || o.is_zero()) {
    *this = QSeries(weight, 0, {}, order);
    return *this;
  }
  int lo = min_exp_ + o.min_exp_;
  long span = static_cast<long>(coeffs_.size() + o.coeffs_.size()) - 1;
  long limit = std::min(span, static_cast<long>(order) - lo);
  std::vector<Rational> out(limit > 0 ? static_cast<std::size_t>(limit) : 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      long e = static_cast<long>(i + j);
      if (e >= limit) break;
      out[static_cast<std::size_t>(e)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  *this = QSeries(weight, lo, std::move(out), order);
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    min_exp_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool QSeries::operator==(const QSeries& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (weight_ != o.weight_) return false;
  QSeries a = truncated(o.order_);
  QSeries b = o.truncated(order_);
  return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

QSeries QSeries::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero series");
  // relative precision of the input carries over to the inverse
  long rel = is_exact() ? static_cast<long>(kExact) : static_cast<long>(order_) - min_exp_;
  if (is_exact() && coeffs_.size() > 1) {
    throw std::domain_error("inverse of a non-monomial exact series needs a finite order");
  }
  int out_order = clamp_order(is_exact() ? static_cast<long>(kExact) : -min_exp_ + rel);
  std::size_t n = is_exact() ? 1 : static_cast<std::size_t>(rel);
  std::vector<Rational> inv(n);
  Rational lead_inv = 1 / coeffs_[0];
  inv[0] = lead_inv;
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= m && i < coeffs_.size(); ++i) acc += coeffs_[i] * inv[m - i];
    inv[m] = -acc * lead_inv;
  }
  return QSeries(-weight_, -min_exp_, std::move(inv), out_order);
}

QSeries QSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QSeries result = constant(1);
  QSeries base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> QSeries::evaluate(std::complex<double> q) const {
  std::complex<double> acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * q + std::complex<double>(coeffs_[i].get_d(), 0.0);
  }
  return acc * std::pow(q, min_exp_);
}

std::string QSeries::render() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    int e = min_exp_ + static_cast<int>(i);
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string body = to_string(mag);
    if (e == 0) {
      os << body;
      continue;
    }
    if (mag != 1) {
      os << (mag.get_den() == 1 ? body : "(" + body + ")") << " ";
    }
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace modwit
