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

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modwit/scalar.hpp"

namespace modwit {

constexpr int kMaxGenerators = 32;

struct Monomial {
  std::array<int8_t, kMaxGenerators> e{};
  auto operator<=>(const Monomial&) const = default;
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int8_t x) { return x == 0; });
  }
};

struct GeneratorSpec {
  std::string name;
  int degree = 0;           // form degree
  int weight = 0;           // modular weight, bookkeeping only
  bool invertible = false;  // allowed only in form degree 0
  std::string differential; // parsed in the assembled algebra; empty means closed
};

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finitely generated graded-commutative algebra with a differential.
// Generators are kept sorted by name; monomials of form degree above the
// truncation degree vanish.
class Algebra {
 public:
  static AlgebraPtr create(std::vector<GeneratorSpec> generators, int truncation_degree);

  int size() const { return static_cast<int>(gens_.size()); }
  const GeneratorSpec& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  int index_of(std::string_view name) const;
  int require(std::string_view name) const;
  int truncation_degree() const { return truncation_; }
  bool is_odd(int i) const { return (odd_mask_ >> i) & 1U; }
  uint32_t odd_mask() const { return odd_mask_; }

  int form_degree(const Monomial& m) const;
  uint32_t odd_support(const Monomial& m) const;
  bool parity_odd(const Monomial& m) const;

  // 0 when the product vanishes (odd square or truncation), otherwise the
  // Koszul sign of a*b rewritten in canonical order.
  int multiply(const Monomial& a, const Monomial& b, Monomial& out) const;

  const std::vector<std::pair<Monomial, Rational>>& differential_terms(int i) const {
    return diffs_[static_cast<std::size_t>(i)];
  }

  std::string render_monomial(const Monomial& m) const;
  bool same_as(const Algebra& o) const;

 private:
  Algebra() = default;
  std::vector<GeneratorSpec> gens_;
  std::vector<std::vector<std::pair<Monomial, Rational>>> diffs_;
  int truncation_ = 0;
  uint32_t odd_mask_ = 0;
};

template <class S>
class Element {
 public:
  using Term = std::pair<Monomial, S>;
  using Traits = ScalarTraits<S>;

  Element() = default;
  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static Element constant(const AlgebraPtr& alg, const S& c) {
    return monomial(alg, Monomial{}, c);
  }
  static Element monomial(const AlgebraPtr& alg, const Monomial& m, const S& c) {
    Element r(alg);
    if (!Traits::is_zero(c) && alg->form_degree(m) <= alg->truncation_degree()) {
      r.terms_.emplace_back(m, c);
    }
    return r;
  }
  static Element generator(const AlgebraPtr& alg, std::string_view name, int power = 1) {
    Monomial m;
    int i = alg->require(name);
    if (power < 0 && !alg->generator(i).invertible) {
      throw NotInvertible("generator " + std::string(name) + " is not invertible");
    }
    if (alg->is_odd(i) && power > 1) return Element(alg);
    m.e[static_cast<std::size_t>(i)] = static_cast<int8_t>(power);
    return monomial(alg, m, Traits::one());
  }
  static Element from_terms(const AlgebraPtr& alg, std::vector<Term> terms);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  S coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Traits::zero();
  }

  Element operator-() const {
    Element r = *this;
    for (auto& t : r.terms_) t.second = Traits::zero() - t.second;
    return r;
  }
  Element operator+(const Element& o) const { return combine(o, false); }
  Element operator-(const Element& o) const { return combine(o, true); }
  Element operator*(const Element& o) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element scaled(const S& c) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      S v = t.second * c;
      if (!Traits::is_zero(v)) out.emplace_back(t.first, std::move(v));
    }
    Element r(alg_);
    r.terms_ = std::move(out);
    return r;
  }
  bool operator==(const Element& o) const {
    check_same(o);
    return (*this - o).is_zero();
  }

  Element form_degree_part(int d) const {
    Element r(alg_);
    for (const auto& t : terms_) {
      if (alg_->form_degree(t.first) == d) r.terms_.push_back(t);
    }
    return r;
  }
  bool is_even() const {
    return std::none_of(terms_.begin(), terms_.end(),
                        [&](const Term& t) { return alg_->parity_odd(t.first); });
  }
  bool is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return alg_->parity_odd(t.first); });
  }
  Element pow(int e) const;

  std::string render() const;

  void check_same(const Element& o) const {
    if (!alg_ || !o.alg_) throw std::invalid_argument("element without algebra");
    if (alg_ != o.alg_ && !alg_->same_as(*o.alg_)) {
      throw std::invalid_argument("elements belong to different generator sets");
    }
  }

 private:
  Element combine(const Element& o, bool subtract) const;

  AlgebraPtr alg_;
  std::vector<Term> terms_;  // sorted by monomial, nonzero coefficients
};

template <class S>
Element<S> Element<S>::from_terms(const AlgebraPtr& alg, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Element r(alg);
  const int D = alg->truncation_degree();
  for (auto& t : terms) {
    if (alg->form_degree(t.first) > D) continue;
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second = r.terms_.back().second + t.second;
      continue;
    }
    if (!r.terms_.empty() && Traits::is_zero(r.terms_.back().second)) r.terms_.pop_back();
    r.terms_.push_back(std::move(t));
  }
  if (!r.terms_.empty() && Traits::is_zero(r.terms_.back().second)) r.terms_.pop_back();
  return r;
}

template <class S>
Element<S> Element<S>::combine(const Element& o, bool subtract) const {
  check_same(o);
  Element r(alg_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  auto push = [&](const Monomial& m, S v) {
    if (!Traits::is_zero(v)) r.terms_.emplace_back(m, std::move(v));
  };
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      push(a->first, a->second);
      ++a;
    } else if (a == terms_.end() || b->first < a->first) {
      push(b->first, subtract ? S(Traits::zero() - b->second) : S(b->second));
      ++b;
    } else {
      push(a->first, subtract ? S(a->second - b->second) : S(a->second + b->second));
      ++a;
      ++b;
    }
  }
  return r;
}

template <class S>
Element<S> Element<S>::operator*(const Element& o) const {
  check_same(o);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  Monomial m;
  for (const auto& x : terms_) {
    for (const auto& y : o.terms_) {
      int sign = alg_->multiply(x.first, y.first, m);
      if (sign == 0) continue;
      S v = x.second * y.second;
      if (sign < 0) v = Traits::zero() - v;
      out.emplace_back(m, std::move(v));
    }
  }
  return from_terms(alg_, std::move(out));
}

template <class S>
Element<S> Element<S>::pow(int e) const {
  Element r = constant(alg_, Traits::one());
  Element base = e < 0 ? inverse_unit(*this) : *this;
  if (e < 0) e = -e;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

namespace detail {

template <class S>
std::pair<bool, std::string> coefficient_text(const S& c) {
  if (ScalarTraits<S>::is_one(c)) return {false, ""};
  return {false, "(" + ScalarTraits<S>::render(c) + ")"};
}

template <>
inline std::pair<bool, std::string> coefficient_text<Rational>(const Rational& c) {
  Rational mag = abs(c);
  bool neg = c < 0;
  if (mag == 1) return {neg, ""};
  if (mag.get_den() == 1) return {neg, to_string(mag)};
  return {neg, "(" + to_string(mag) + ")"};
}

}  // namespace detail

// Terms ordered by form degree, then by monomial; "1 + (1/2)·G2^2·b^4·x1^4".
template <class S>
std::string Element<S>::render() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [&](const Term* a, const Term* b) {
    return alg_->form_degree(a->first) < alg_->form_degree(b->first);
  });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    auto [neg, coef] = detail::coefficient_text(t->second);
    std::string mono = t->first.is_one() ? "" : alg_->render_monomial(t->first);
    std::string body;
    if (mono.empty()) {
      body = coef.empty() ? "1" : coef;
    } else {
      body = coef.empty() ? mono : coef + "·" + mono;
    }
    if (first) {
      out += (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

// ---- structural operations -------------------------------------------------

template <class S>
Element<S> differential_of_generator(const AlgebraPtr& alg, int i) {
  std::vector<typename Element<S>::Term> terms;
  for (const auto& [m, c] : alg->differential_terms(i)) {
    terms.emplace_back(m, ScalarTraits<S>::from_rational(c));
  }
  return Element<S>::from_terms(alg, std::move(terms));
}

// Graded Leibniz extension of the generator differentials.
template <class S>
Element<S> differential(const Element<S>& a) {
  const AlgebraPtr& alg = a.algebra();
  std::vector<Element<S>> dgen;
  std::vector<bool> closed;
  for (int i = 0; i < alg->size(); ++i) {
    closed.push_back(alg->differential_terms(i).empty());
    dgen.push_back(closed.back() ? Element<S>(alg) : differential_of_generator<S>(alg, i));
  }
  Element<S> result(alg);
  for (const auto& [m, c] : a.terms()) {
    for (int i = 0; i < alg->size(); ++i) {
      int e = m.e[static_cast<std::size_t>(i)];
      if (e == 0 || closed[static_cast<std::size_t>(i)]) continue;
      Monomial prefix;
      Monomial suffix;
      Monomial rest;
      for (int j = 0; j < alg->size(); ++j) {
        if (j < i) prefix.e[static_cast<std::size_t>(j)] = m.e[static_cast<std::size_t>(j)];
        if (j > i) suffix.e[static_cast<std::size_t>(j)] = m.e[static_cast<std::size_t>(j)];
      }
      rest.e[static_cast<std::size_t>(i)] = static_cast<int8_t>(e - 1);
      // d(g^e) = e g^{e-1} dg for even g; odd generators have e = 1
      S factor = ScalarTraits<S>::from_rational(Rational(e));
      if (alg->form_degree(prefix) % 2 == 1) factor = ScalarTraits<S>::zero() - factor;
      Element<S> piece = Element<S>::monomial(alg, prefix, c * factor) *
                         (Element<S>::monomial(alg, rest, ScalarTraits<S>::one()) *
                          dgen[static_cast<std::size_t>(i)]) *
                         Element<S>::monomial(alg, suffix, ScalarTraits<S>::one());
      result += piece;
    }
  }
  return result;
}

template <class S>
bool has_form_degree_zero_terms(const Element<S>& a) {
  for (const auto& t : a.terms()) {
    if (a.algebra()->form_degree(t.first) == 0) return true;
  }
  return false;
}

template <class S>
Element<S> exp_nilpotent(const Element<S>& a) {
  if (has_form_degree_zero_terms(a)) {
    throw std::domain_error("exp needs an input without form-degree-0 part");
  }
  if (!a.is_even()) throw std::domain_error("exp needs an even input");
  const AlgebraPtr& alg = a.algebra();
  Element<S> result = Element<S>::constant(alg, ScalarTraits<S>::one());
  Element<S> power = result;
  for (int n = 1; !power.is_zero(); ++n) {
    power = (power * a).scaled(ScalarTraits<S>::from_rational(Rational(1, n)));
    result += power;
  }
  return result;
}

template <class S>
Element<S> log_unital(const Element<S>& u) {
  const AlgebraPtr& alg = u.algebra();
  Element<S> one = Element<S>::constant(alg, ScalarTraits<S>::one());
  Element<S> n = u - one;
  if (has_form_degree_zero_terms(n)) {
    throw std::domain_error("log needs 1 + (terms of positive form degree)");
  }
  Element<S> result(alg);
  Element<S> power = one;
  for (int k = 1;; ++k) {
    power = power * n;
    if (power.is_zero()) break;
    Rational c(k % 2 == 1 ? 1 : -1, k);
    result += power.scaled(ScalarTraits<S>::from_rational(c));
  }
  return result;
}

// Inverse of L + N where L is a single form-degree-0 term in invertible
// generators with invertible coefficient and N has positive form degree.
template <class S>
std::optional<Element<S>> try_inverse_unit(const Element<S>& a) {
  const AlgebraPtr& alg = a.algebra();
  const typename Element<S>::Term* lead = nullptr;
  for (const auto& t : a.terms()) {
    if (alg->form_degree(t.first) != 0) continue;
    if (lead) return std::nullopt;
    lead = &t;
  }
  if (!lead) return std::nullopt;
  Monomial inv_m;
  for (int i = 0; i < alg->size(); ++i) {
    int e = lead->first.e[static_cast<std::size_t>(i)];
    if (e != 0 && !alg->generator(i).invertible) return std::nullopt;
    inv_m.e[static_cast<std::size_t>(i)] = static_cast<int8_t>(-e);
  }
  auto inv_c = ScalarTraits<S>::inverse(lead->second);
  if (!inv_c) return std::nullopt;
  Element<S> linv = Element<S>::monomial(alg, inv_m, *inv_c);
  Element<S> n = a - Element<S>::monomial(alg, lead->first, lead->second);
  Element<S> x = -(n * linv);
  Element<S> sum = Element<S>::constant(alg, ScalarTraits<S>::one());
  Element<S> power = sum;
  while (true) {
    power = power * x;
    if (power.is_zero()) break;
    sum += power;
  }
  return linv * sum;
}

template <class S>
Element<S> inverse_unit(const Element<S>& a) {
  auto r = try_inverse_unit(a);
  if (!r) throw NotInvertible("element " + a.render() + " is not a unit");
  return *r;
}

// q with q*g = a, for g = (single generator) * (unit monomial).
template <class S>
Element<S> divide_exact(const Element<S>& a, const Element<S>& g) {
  a.check_same(g);
  const AlgebraPtr& alg = a.algebra();
  if (g.terms().size() != 1) throw std::invalid_argument("divisor must be a single term");
  const auto& [gm, gc] = g.terms().front();
  int pivot = -1;
  for (int i = 0; i < alg->size(); ++i) {
    int e = gm.e[static_cast<std::size_t>(i)];
    if (e == 0 || alg->generator(i).invertible) continue;
    if (e != 1 || pivot >= 0 || alg->is_odd(i)) {
      throw std::invalid_argument("divisor must be one even generator times a unit");
    }
    pivot = i;
  }
  if (pivot < 0) throw std::invalid_argument("divisor has no non-invertible generator");
  auto ginv = ScalarTraits<S>::inverse(gc);
  if (!ginv) throw NotDivisible("divisor coefficient is not invertible");
  std::vector<typename Element<S>::Term> out;
  Monomial check;
  for (const auto& [m, c] : a.terms()) {
    if (m.e[static_cast<std::size_t>(pivot)] < 1) {
      throw NotDivisible("term " + alg->render_monomial(m) + " is not divisible by " +
                         alg->generator(pivot).name);
    }
    Monomial q;
    for (int i = 0; i < alg->size(); ++i) {
      q.e[static_cast<std::size_t>(i)] =
          static_cast<int8_t>(m.e[static_cast<std::size_t>(i)] - gm.e[static_cast<std::size_t>(i)]);
    }
    // g is even, so q*g = g*q needs no sign
    int sign = alg->multiply(q, gm, check);
    S v = c * *ginv;
    if (sign < 0) v = ScalarTraits<S>::zero() - v;
    out.emplace_back(q, v);
  }
  return Element<S>::from_terms(alg, std::move(out));
}

// Reduction modulo the principal ideal (rel): the lexicographically
// largest monomial L of rel is rewritten as L - rel / lc(L) until no term
// is divisible by L.
template <class S>
Element<S> impose_relation(const Element<S>& a, const Element<S>& rel) {
  a.check_same(rel);
  const AlgebraPtr& alg = a.algebra();
  if (rel.is_zero()) return a;
  if (!rel.is_even()) throw std::invalid_argument("relation must be even");
  int deg = alg->form_degree(rel.terms().front().first);
  for (const auto& t : rel.terms()) {
    if (alg->form_degree(t.first) != deg) throw std::invalid_argument("relation must be homogeneous");
  }
  const auto& lead = rel.terms().back();
  const Monomial L = lead.first;
  auto lc_inv = ScalarTraits<S>::inverse(lead.second);
  if (!lc_inv) throw std::invalid_argument("leading coefficient of the relation is not invertible");
  for (int i = 0; i < alg->size(); ++i) {
    if (L.e[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("relation with negative exponents");
  }
  std::map<Monomial, S> work;
  for (const auto& t : a.terms()) work.emplace(t.first, t.second);
  auto divisible = [&](const Monomial& m) {
    for (int i = 0; i < alg->size(); ++i) {
      int l = L.e[static_cast<std::size_t>(i)];
      if (l > 0 && m.e[static_cast<std::size_t>(i)] < l) return false;
    }
    return true;
  };
  Monomial tmp;
  auto it = work.end();
  while (it != work.begin()) {
    --it;
    if (!divisible(it->first)) continue;
    Monomial m = it->first;
    S c = it->second;
    Monomial rest;
    for (int i = 0; i < alg->size(); ++i) {
      rest.e[static_cast<std::size_t>(i)] =
          static_cast<int8_t>(m.e[static_cast<std::size_t>(i)] - L.e[static_cast<std::size_t>(i)]);
    }
    int s = alg->multiply(L, rest, tmp);
    if (s == 0) throw std::logic_error("inconsistent monomial factorization");
    S base = c * *lc_inv;
    if (s < 0) base = ScalarTraits<S>::zero() - base;
    // c m = base * lc * L * rest  ->  -base * (rel - lc L) * rest
    it = work.erase(it);
    for (const auto& [tm, tc] : rel.terms()) {
      if (tm == L) continue;
      Monomial out;
      int s2 = alg->multiply(tm, rest, out);
      if (s2 == 0) continue;
      S v = ScalarTraits<S>::zero() - base * tc;
      if (s2 < 0) v = ScalarTraits<S>::zero() - v;
      auto [pos, inserted] = work.emplace(out, v);
      if (!inserted) {
        pos->second = pos->second + v;
        if (ScalarTraits<S>::is_zero(pos->second)) work.erase(pos);
      }
    }
    // new monomials are smaller than m; continue from the position below m
    it = work.lower_bound(m);
  }
  std::vector<typename Element<S>::Term> out(work.begin(), work.end());
  return Element<S>::from_terms(alg, std::move(out));
}

// Algebra homomorphism into `target`: generators listed in `images` go to
// the given elements, the others to the generator of the same name.
template <class S>
Element<S> substitute(const Element<S>& a, const AlgebraPtr& target,
                      const std::map<std::string, Element<S>>& images) {
  const AlgebraPtr& src = a.algebra();
  std::vector<Element<S>> img;
  std::vector<std::optional<Element<S>>> img_inv(static_cast<std::size_t>(src->size()));
  for (int i = 0; i < src->size(); ++i) {
    const auto& name = src->generator(i).name;
    auto it = images.find(name);
    if (it != images.end()) {
      if (it->second.algebra() != target && !it->second.algebra()->same_as(*target)) {
        throw std::invalid_argument("image of " + name + " lives in a different algebra");
      }
      img.push_back(it->second);
    } else {
      if (target->index_of(name) < 0) {
        throw std::invalid_argument("generator " + name + " has no image in the target algebra");
      }
      img.push_back(Element<S>::generator(target, name));
    }
  }
  Element<S> result(target);
  for (const auto& [m, c] : a.terms()) {
    Element<S> term = Element<S>::constant(target, c);
    for (int i = 0; i < src->size() && !term.is_zero(); ++i) {
      int e = m.e[static_cast<std::size_t>(i)];
      if (e > 0) {
        term = term * img[static_cast<std::size_t>(i)].pow(e);
      } else if (e < 0) {
        auto& inv = img_inv[static_cast<std::size_t>(i)];
        if (!inv) inv = inverse_unit(img[static_cast<std::size_t>(i)]);
        term = term * inv->pow(-e);
      }
    }
    result += term;
  }
  return result;
}

// Replaces even form-degree-0 generators by scalar values.
template <class To, class From>
Element<To> specialize(const Element<From>& a, const std::map<std::string, To>& values) {
  const AlgebraPtr& alg = a.algebra();
  std::vector<std::pair<int, To>> vals;
  for (const auto& [name, v] : values) {
    int i = alg->require(name);
    if (alg->is_odd(i) || alg->generator(i).degree != 0) {
      throw std::invalid_argument("only even form-degree-0 generators can be specialized");
    }
    vals.emplace_back(i, v);
  }
  std::vector<typename Element<To>::Term> out;
  for (const auto& [m, c] : a.terms()) {
    To v = lift_scalar<To, From>(c);
    Monomial mm = m;
    for (const auto& [i, x] : vals) {
      int e = mm.e[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      To p = ScalarTraits<To>::one();
      if (e > 0) {
        for (int k = 0; k < e; ++k) p = p * x;
      } else {
        auto inv = ScalarTraits<To>::inverse(x);
        if (!inv) throw NotInvertible("specialized value is not invertible");
        for (int k = 0; k < -e; ++k) p = p * *inv;
      }
      v = v * p;
      mm.e[static_cast<std::size_t>(i)] = 0;
    }
    if (!ScalarTraits<To>::is_zero(v)) out.emplace_back(mm, v);
  }
  return Element<To>::from_terms(alg, std::move(out));
}

template <class To, class From>
Element<To> lift(const Element<From>& a) {
  std::vector<typename Element<To>::Term> out;
  for (const auto& [m, c] : a.terms()) out.emplace_back(m, lift_scalar<To, From>(c));
  return Element<To>::from_terms(a.algebra(), std::move(out));
}

// Rational projection of a Q(i)[pi, 1/pi] element; throws when some
// coefficient is not rational.
Element<Rational> project_rational(const Element<GaussianPi>& a);

// Exponent of generator `name` in monomial m.
inline int exponent_of(const Algebra& alg, const Monomial& m, std::string_view name) {
  int i = alg.index_of(name);
  return i < 0 ? 0 : m.e[static_cast<std::size_t>(i)];
}

// Text parser for rational elements: sums of terms such as
// "(1/2)·G2^2·b^4", "-3*x1^2", "b^-2"; "·" and "*" both separate factors.
Element<Rational> parse_element(const AlgebraPtr& alg, std::string_view text);

}  // namespace modwit
