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

#include "modwit/rational.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace modwit {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(const std::string& s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

Rational parse_decimal(const std::string& s) {
  std::string mant = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mant = s.substr(0, e);
    std::string ex = s.substr(e + 1);
    if (!is_integer_literal(ex)) throw std::invalid_argument("bad exponent in '" + s + "'");
    exponent = std::stol(ex);
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (std::size_t i = 0; i < mant.size(); ++i) {
    char c = mant[i];
    if (i == 0 && (c == '-' || c == '+')) {
      if (c == '-') digits.push_back('-');
      continue;
    }
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("bad decimal '" + s + "'");
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad number '" + s + "'");
    }
    digits.push_back(c);
    if (seen_point) ++scale;
  }
  if (digits.empty() || digits == "-") throw std::invalid_argument("bad number '" + s + "'");
  Rational r(Integer(digits, 10));
  long shift = exponent - scale;
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    r *= ten;
  } else {
    r /= ten;
  }
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer p = parse_integer(trim(s.substr(0, slash)));
    Integer q = parse_integer(trim(s.substr(slash + 1)));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  if (is_integer_literal(s)) return Rational(parse_integer(s));
  return parse_decimal(s);
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("negative Bernoulli index");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    Rational acc = 0;
    Integer binom = 1;
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * table[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

Integer divisor_sigma(int p, long n) {
  if (n <= 0) throw std::invalid_argument("divisor_sigma needs n > 0");
  Integer total = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(p));
    total += t;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(p));
      total += t;
    }
  }
  return total;
}

}  // namespace modwit
