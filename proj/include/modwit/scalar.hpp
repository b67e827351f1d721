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

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "modwit/qseries.hpp"
#include "modwit/rational.hpp"

namespace modwit {

using Complex = std::complex<double>;

struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const;
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string render() const;
};

// Element of Q(i)[pi, 1/pi]: a finite sum of c_p * pi^p with Gaussian
// rational c_p.
class GaussianPi {
 public:
  GaussianPi() = default;
  GaussianPi(const Rational& r) { add_term(0, {r, 0}); }  // NOLINT
  GaussianPi(const GaussianRational& g, int pi_power = 0) { add_term(pi_power, g); }

  static GaussianPi pi(int power = 1) { return GaussianPi(GaussianRational{1, 0}, power); }
  static GaussianPi i() { return GaussianPi(GaussianRational{0, 1}); }

  const std::map<int, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;

  GaussianPi operator-() const;
  GaussianPi& operator+=(const GaussianPi& o);
  GaussianPi& operator-=(const GaussianPi& o) { return *this += -o; }
  GaussianPi operator+(const GaussianPi& o) const { GaussianPi r = *this; return r += o; }
  GaussianPi operator-(const GaussianPi& o) const { GaussianPi r = *this; return r -= o; }
  GaussianPi operator*(const GaussianPi& o) const;
  bool operator==(const GaussianPi& o) const { return terms_ == o.terms_; }

  // Only single-term values are invertible.
  std::optional<GaussianPi> inverse() const;

  Complex to_complex() const;
  std::string render() const;

 private:
  void add_term(int power, const GaussianRational& c);
  std::map<int, GaussianRational> terms_;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr const char* kName = "rational";
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_one(const Rational& x) { return x == 1; }
  static Rational from_rational(const Rational& x) { return x; }
  static std::optional<Rational> inverse(const Rational& x) {
    if (x == 0) return std::nullopt;
    return Rational(1 / x);
  }
  static std::string render(const Rational& x) { return to_string(x); }
};

template <>
struct ScalarTraits<GaussianPi> {
  static constexpr const char* kName = "gaussian-pi";
  static GaussianPi zero() { return {}; }
  static GaussianPi one() { return Rational(1); }
  static bool is_zero(const GaussianPi& x) { return x.is_zero(); }
  static bool is_one(const GaussianPi& x) { return x == one(); }
  static GaussianPi from_rational(const Rational& x) { return x; }
  static std::optional<GaussianPi> inverse(const GaussianPi& x) { return x.inverse(); }
  static std::string render(const GaussianPi& x) { return x.render(); }
};

template <>
struct ScalarTraits<QSeries> {
  static constexpr const char* kName = "qseries";
  static QSeries zero() { return {}; }
  static QSeries one() { return QSeries::constant(1); }
  static bool is_zero(const QSeries& x) { return x.is_zero(); }
  static bool is_one(const QSeries& x) { return x.weight() == 0 && x == one() && x.is_exact(); }
  static QSeries from_rational(const Rational& x) { return QSeries::constant(x); }
  static std::optional<QSeries> inverse(const QSeries& x) {
    if (x.is_zero()) return std::nullopt;
    if (x.is_exact() && x.coeffs().size() > 1) return std::nullopt;
    return x.inverse();
  }
  static std::string render(const QSeries& x) { return x.render(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr const char* kName = "complex";
  static Complex zero() { return 0.0; }
  static Complex one() { return 1.0; }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static bool is_one(const Complex& x) { return x == Complex(1.0, 0.0); }
  static Complex from_rational(const Rational& x) { return x.get_d(); }
  static std::optional<Complex> inverse(const Complex& x) {
    if (is_zero(x)) return std::nullopt;
    return 1.0 / x;
  }
  static std::string render(const Complex& x);
};

// Explicit injections of the scalar tower.
template <class To, class From>
To lift_scalar(const From& x);

template <>
inline Rational lift_scalar<Rational, Rational>(const Rational& x) { return x; }
template <>
inline GaussianPi lift_scalar<GaussianPi, Rational>(const Rational& x) { return x; }
template <>
inline GaussianPi lift_scalar<GaussianPi, GaussianPi>(const GaussianPi& x) { return x; }
template <>
inline Complex lift_scalar<Complex, Rational>(const Rational& x) { return x.get_d(); }
template <>
inline Complex lift_scalar<Complex, GaussianPi>(const GaussianPi& x) { return x.to_complex(); }
template <>
inline Complex lift_scalar<Complex, Complex>(const Complex& x) { return x; }
template <>
inline QSeries lift_scalar<QSeries, Rational>(const Rational& x) { return QSeries::constant(x); }
template <>
inline QSeries lift_scalar<QSeries, QSeries>(const QSeries& x) { return x; }

// Decimal rendering with round-trip precision.
std::string format_double(double x);

}  // namespace modwit
