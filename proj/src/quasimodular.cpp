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

#include "modwit/quasimodular.hpp"

#include "modwit/eisenstein.hpp"

namespace modwit {

bool QuasiModularPolynomial::involves_e2() const {
  for (const auto& [m, c] : terms) {
    if (m[0] > 0) return true;
  }
  return false;
}

QuasiModularPolynomial QuasiModularPolynomial::e2_part() const {
  QuasiModularPolynomial r{weight, {}};
  for (const auto& [m, c] : terms) {
    if (m[0] > 0) r.terms.emplace(m, c);
  }
  return r;
}

QuasiModularPolynomial QuasiModularPolynomial::without_e2() const {
  QuasiModularPolynomial r{weight, {}};
  for (const auto& [m, c] : terms) {
    if (m[0] == 0) r.terms.emplace(m, c);
  }
  return r;
}

QSeries expand_monomial(const QmMonomial& m, int order) {
  QSeries r = QSeries::constant(1);
  for (int i = 0; i < 3; ++i) {
    if (m[i] > 0) r *= eisenstein_q(i + 1, order).pow(m[i]);
  }
  return r.truncated(order);
}

QSeries QuasiModularPolynomial::expand(int order) const {
  QSeries r = QSeries(weight, 0, {}, order);
  for (const auto& [m, c] : terms) r += expand_monomial(m, order) * c;
  return r.with_weight(weight);
}

std::string QuasiModularPolynomial::render() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  // descending E2 exponent, then E4 exponent
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    const char* names[3] = {"E2", "E4", "E6"};
    for (int i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "·";
      mono += names[i];
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    Rational mag = abs(c);
    std::string coef = mag == 1 ? "" : (mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")");
    std::string body;
    if (mono.empty()) {
      body = coef.empty() ? "1" : coef;
    } else {
      body = coef.empty() ? mono : coef + "·" + mono;
    }
    if (first) {
      out += (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

std::vector<QmMonomial> quasi_modular_basis(int weight) {
  std::vector<QmMonomial> out;
  if (weight < 0 || weight % 2 != 0) return out;
  for (int a = weight / 2; a >= 0; --a) {
    for (int b = (weight - 2 * a) / 4; b >= 0; --b) {
      int rest = weight - 2 * a - 4 * b;
      if (rest % 6 == 0) out.push_back({a, b, rest / 6});
    }
  }
  return out;
}

QuasiModularPolynomial quasi_modular_decompose(const QSeries& f) {
  const int w = f.weight();
  QuasiModularPolynomial result{w, {}};
  auto basis = quasi_modular_basis(w);
  if (f.is_zero()) {
    if (!f.is_exact() && f.order() < static_cast<int>(basis.size()) + 2) {
      throw std::invalid_argument("series order too small to decompose");
    }
    return result;
  }
  if (f.min_exp() < 0) throw NoDecomposition("series has a pole at q = 0");
  if (basis.empty()) throw NoDecomposition("no quasi-modular forms of weight " + std::to_string(w));
  if (f.order() < static_cast<int>(basis.size()) + 2) {
    throw std::invalid_argument("series order " + std::to_string(f.order()) +
                                " too small for weight " + std::to_string(w));
  }
  const int rows = f.is_exact() ? std::max(static_cast<int>(f.coeffs().size()), static_cast<int>(basis.size()) + 2)
                                : f.order();
  const std::size_t n = basis.size();
  // augmented matrix [A | b], A[e][j] = q^e coefficient of basis j
  std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(rows), std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    QSeries s = expand_monomial(basis[j], rows);
    for (int e = 0; e < rows; ++e) mat[static_cast<std::size_t>(e)][j] = s.coefficient(e);
  }
  for (int e = 0; e < rows; ++e) mat[static_cast<std::size_t>(e)][n] = f.coefficient(e);

  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < mat.size(); ++c) {
    std::size_t p = r;
    while (p < mat.size() && mat[p][c] == 0) ++p;
    if (p == mat.size()) continue;
    std::swap(mat[p], mat[r]);
    Rational inv = 1 / mat[r][c];
    for (auto& x : mat[r]) x *= inv;
    for (std::size_t i = 0; i < mat.size(); ++i) {
      if (i == r || mat[i][c] == 0) continue;
      Rational factor = mat[i][c];
      for (std::size_t k = c; k <= n; ++k) mat[i][k] -= factor * mat[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < mat.size(); ++i) {
    if (mat[i][n] != 0) {
      throw NoDecomposition("series is not quasi-modular of weight " + std::to_string(w) +
                            " up to q^" + std::to_string(rows));
    }
  }
  if (pivot_col.size() < n) {
    throw std::invalid_argument("basis series are dependent at this order; raise the order");
  }
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    const Rational& c = mat[i][n];
    if (c != 0) result.terms.emplace(basis[static_cast<std::size_t>(pivot_col[i])], c);
  }
  return result;
}

}  // namespace modwit
