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

#include "modwit/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace modwit {

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("inverse of zero");
  return {re / n, -im / n};
}

std::string GaussianRational::render() const {
  if (im == 0) return to_string(re);
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else {
    imag = to_string(im) + "i";
  }
  if (re == 0) return imag;
  if (imag[0] == '-') return to_string(re) + " - " + imag.substr(1);
  return to_string(re) + " + " + imag;
}

void GaussianPi::add_term(int power, const GaussianRational& c) {
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(power, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool GaussianPi::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.im == 0;
}

Rational GaussianPi::rational_part() const {
  if (!is_rational()) throw std::domain_error("value " + render() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_.begin()->second.re;
}

GaussianPi GaussianPi::operator-() const {
  GaussianPi r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

GaussianPi& GaussianPi::operator+=(const GaussianPi& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

GaussianPi GaussianPi::operator*(const GaussianPi& o) const {
  GaussianPi r;
  for (const auto& [p, c] : terms_) {
    for (const auto& [q, d] : o.terms_) r.add_term(p + q, c * d);
  }
  return r;
}

std::optional<GaussianPi> GaussianPi::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [p, c] = *terms_.begin();
  return GaussianPi(c.inverse(), -p);
}

Complex GaussianPi::to_complex() const {
  Complex acc = 0;
  for (const auto& [p, c] : terms_) acc += c.to_complex() * std::pow(std::numbers::pi, p);
  return acc;
}

std::string GaussianPi::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [p, c] = *it;
    std::string body = c.render();
    if (p == 0) {
      os << body;
      continue;
    }
    if (c.re != 0 && c.im != 0) body = "(" + body + ")";
    if (body == "1") {
      body.clear();
    } else if (body == "-1") {
      body = "-";
    } else {
      body += "·";
    }
    os << body << "pi";
    if (p != 1) os << "^" << p;
  }
  return os.str();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string ScalarTraits<Complex>::render(const Complex& x) {
  return format_double(x.real()) + (std::signbit(x.imag()) ? " - " : " + ") +
         format_double(std::abs(x.imag())) + "i";
}

}  // namespace modwit
