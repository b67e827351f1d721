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

#include "modwit/dga.hpp"

#include <bit>
#include <cctype>
#include <set>

namespace modwit {

AlgebraPtr Algebra::create(std::vector<GeneratorSpec> generators, int truncation_degree) {
  if (generators.size() > static_cast<std::size_t>(kMaxGenerators)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxGenerators) + " generators");
  }
  if (truncation_degree < 0) throw std::invalid_argument("truncation degree must be non-negative");
  std::sort(generators.begin(), generators.end(),
            [](const GeneratorSpec& a, const GeneratorSpec& b) { return a.name < b.name; });
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.name.empty() || !std::isalpha(static_cast<unsigned char>(g.name[0]))) {
      throw std::invalid_argument("bad generator name '" + g.name + "'");
    }
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
    if (g.degree < 0) throw std::invalid_argument("negative form degree for " + g.name);
    if (g.invertible && g.degree != 0) {
      throw std::invalid_argument("invertible generator " + g.name + " must have form degree 0");
    }
  }
  std::shared_ptr<Algebra> alg(new Algebra());
  alg->gens_ = std::move(generators);
  alg->truncation_ = truncation_degree;
  alg->diffs_.resize(alg->gens_.size());
  for (std::size_t i = 0; i < alg->gens_.size(); ++i) {
    if (alg->gens_[i].degree % 2 == 1) alg->odd_mask_ |= (1U << i);
  }
  AlgebraPtr view = alg;
  for (std::size_t i = 0; i < alg->gens_.size(); ++i) {
    const auto& spec = alg->gens_[i];
    if (spec.differential.empty()) continue;
    Element<Rational> d = parse_element(view, spec.differential);
    for (const auto& [m, c] : d.terms()) {
      if (alg->form_degree(m) != spec.degree + 1) {
        throw std::invalid_argument("d(" + spec.name + ") must have form degree " +
                                    std::to_string(spec.degree + 1));
      }
      alg->diffs_[i].emplace_back(m, c);
    }
  }
  for (int i = 0; i < alg->size(); ++i) {
    if (alg->diffs_[static_cast<std::size_t>(i)].empty()) continue;
    Element<Rational> dd = differential(differential_of_generator<Rational>(view, i));
    if (!dd.is_zero()) {
      throw std::invalid_argument("d(d(" + alg->gens_[static_cast<std::size_t>(i)].name + ")) != 0");
    }
  }
  return view;
}

int Algebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int Algebra::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return i;
}

int Algebra::form_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += m.e[i] * gens_[i].degree;
  return d;
}

uint32_t Algebra::odd_support(const Monomial& m) const {
  uint32_t s = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (m.e[i] != 0 && ((odd_mask_ >> i) & 1U)) s |= (1U << i);
  }
  return s;
}

bool Algebra::parity_odd(const Monomial& m) const {
  return std::popcount(odd_support(m)) % 2 == 1;
}

int Algebra::multiply(const Monomial& a, const Monomial& b, Monomial& out) const {
  uint32_t oa = odd_support(a);
  uint32_t ob = odd_support(b);
  if (oa & ob) return 0;
  int d = 0;
  const std::size_t n = gens_.size();
  for (std::size_t i = 0; i < n; ++i) {
    int e = a.e[i] + b.e[i];
    out.e[i] = static_cast<int8_t>(e);
    d += e * gens_[i].degree;
  }
  for (std::size_t i = n; i < out.e.size(); ++i) out.e[i] = 0;
  if (d > truncation_) return 0;
  // moving each odd factor of b left past the larger odd factors of a
  int swaps = 0;
  uint32_t rest = oa;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    swaps += std::popcount(ob & ((1U << i) - 1U));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

std::string Algebra::render_monomial(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    int e = m.e[i];
    if (e == 0) continue;
    if (!out.empty()) out += "·";
    out += gens_[i].name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool Algebra::same_as(const Algebra& o) const {
  if (truncation_ != o.truncation_ || gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& a = gens_[i];
    const auto& b = o.gens_[i];
    if (a.name != b.name || a.degree != b.degree || a.invertible != b.invertible) return false;
    if (diffs_[i] != o.diffs_[i]) return false;
  }
  return true;
}

Element<Rational> project_rational(const Element<GaussianPi>& a) {
  std::vector<Element<Rational>::Term> out;
  for (const auto& [m, c] : a.terms()) out.emplace_back(m, c.rational_part());
  return Element<Rational>::from_terms(a.algebra(), std::move(out));
}

namespace {

class Parser {
 public:
  Parser(const AlgebraPtr& alg, std::string_view text) : alg_(alg), s_(text) {}

  Element<Rational> parse() {
    Element<Rational> result(alg_);
    skip();
    if (at_end()) throw error("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      Element<Rational> t = term();
      result += sign > 0 ? t : -t;
      skip();
    }
    return result;
  }

 private:
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in '" +
                                 std::string(s_) + "': " + what);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool take_product_sign() {
    skip();
    if (!at_end() && peek() == '*') {
      ++pos_;
      return true;
    }
    if (s_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  Element<Rational> term() {
    Element<Rational> t = factor();
    while (take_product_sign()) {
      skip();
      t = t * factor();
    }
    return t;
  }

  std::string integer_text() {
    std::size_t b = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  Element<Rational> factor() {
    skip();
    if (at_end()) throw error("unexpected end");
    char c = peek();
    if (c == '(') {
      auto close = s_.find(')', pos_);
      if (close == std::string_view::npos) throw error("missing ')'");
      Rational r = parse_rational(s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return Element<Rational>::constant(alg_, r);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t b = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                           peek() == '/')) {
        ++pos_;
      }
      return Element<Rational>::constant(alg_, parse_rational(s_.substr(b, pos_ - b)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(s_.substr(b, pos_ - b));
      int power = 1;
      skip();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip();
        std::string digits = integer_text();
        if (digits.empty() || digits == "-" || digits == "+") throw error("bad exponent");
        power = std::stoi(digits);
      }
      if (alg_->index_of(name) < 0) throw error("unknown generator '" + name + "'");
      if (power < 0) {
        return Element<Rational>::generator(alg_, name, power);
      }
      return Element<Rational>::generator(alg_, name).pow(power);
    }
    throw error(std::string("unexpected character '") + c + "'");
  }

  AlgebraPtr alg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element<Rational> parse_element(const AlgebraPtr& alg, std::string_view text) {
  return Parser(alg, text).parse();
}

}  // namespace modwit
