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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/oracles.hpp"
#include "modwit/eisenstein.hpp"
#include "modwit/io.hpp"
#include "modwit/quasimodular.hpp"

using namespace modwit;

namespace {

// q d/dq, raising the weight by two.
QSeries theta(const QSeries& f) {
  std::vector<Rational> c;
  for (int n = f.min_exp(); n < f.order(); ++n) c.push_back(n * f.coefficient(n));
  return QSeries(f.weight() + 2, f.min_exp(), c, f.order());
}

QSeries from_oracle(const std::vector<oracle::Q>& c, int weight) {
  return QSeries(weight, 0, std::vector<Rational>(c.begin(), c.end()), static_cast<int>(c.size()));
}

}  // namespace

TEST_SUITE("qmod") {
  TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == rational(-3, 2));
    CHECK(parse_rational("(1/12)") == rational(1, 12));
    CHECK(parse_rational("0.25") == rational(1, 4));
    CHECK(parse_rational("1.5e-1") == rational(3, 20));
    CHECK(to_string(rational(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  }

  TEST_CASE("Bernoulli numbers and divisor sums match direct computation") {
    for (int n = 0; n <= 24; ++n) CHECK(bernoulli(n) == oracle::bernoulli(n));
    for (int p = 1; p <= 7; p += 2) {
      for (long n = 1; n <= 60; ++n) CHECK(divisor_sigma(p, n) == oracle::sigma(p, n));
    }
  }

  TEST_CASE("Eisenstein q-expansions") {
    CHECK(eisenstein_q(2, 3).render() == "1 + 240 q + 2160 q^2");
    CHECK(eisenstein_q(1, 3).render() == "1 - 24 q - 72 q^2");
    CHECK(eisenstein_q(3, 3).render() == "1 - 504 q - 16632 q^2");
    for (int k = 1; k <= 6; ++k) {
      QSeries f = eisenstein_q(k, 30);
      CHECK(f.weight() == 2 * k);
      CHECK(f == from_oracle(oracle::eisenstein(k, 30), 2 * k));
    }
    CHECK_THROWS_AS(eisenstein_q(0, 5), std::invalid_argument);
  }

  TEST_CASE("ring relations among the Eisenstein series") {
    const int N = 30;
    QSeries e4 = eisenstein_q(2, N), e6 = eisenstein_q(3, N);
    CHECK(e4 * e4 == eisenstein_q(4, N));
    CHECK(e4 * e6 == eisenstein_q(5, N));
    // Ramanujan's derivative identities
    QSeries e2 = eisenstein_q(1, N);
    CHECK(theta(e2) * Rational(12) == e2 * e2 - e4);
    CHECK(theta(e4) * Rational(3) == e2 * e4 - e6);
    CHECK(theta(e6) * Rational(2) == e2 * e6 - e4 * e4);
    // the discriminant has integer coefficients tau(n)
    QSeries delta = (e4.pow(3) - e6 * e6) * rational(1, 1728);
    CHECK(delta.coefficient(0) == 0);
    CHECK(delta.coefficient(1) == 1);
    CHECK(delta.coefficient(2) == -24);
    CHECK(delta.coefficient(3) == 252);
    CHECK(delta.coefficient(11) == 534612);
  }

  TEST_CASE("series arithmetic") {
    QSeries e4 = eisenstein_q(2, 12);
    QSeries inv = e4.inverse();
    CHECK(inv.weight() == -4);
    CHECK(e4 * inv == QSeries::constant(1));
    CHECK(e4.pow(0) == QSeries::constant(1));
    CHECK_THROWS_AS(eisenstein_q(2, 5) + eisenstein_q(3, 5), std::domain_error);
    CHECK((QSeries() + eisenstein_q(3, 5)) == eisenstein_q(3, 5));
    CHECK((e4 - e4).is_zero());
    CHECK(QSeries::monomial(rational(1, 12), 1, 0, 5).render() == "(1/12) q");
    CHECK(QSeries().render() == "0");
    CHECK_THROWS_AS(e4.coefficient(12), std::out_of_range);
    // orders combine to the smaller one
    CHECK((eisenstein_q(2, 5) * eisenstein_q(2, 9)).order() == 5);
  }

  TEST_CASE("structured series records round trip") {
    QSeries f = eisenstein_q(3, 6) * rational(1, 7);
    QSeries g = qseries_from_yaml(qseries_to_yaml(f));
    CHECK(g == f);
    CHECK(g.weight() == 6);
    CHECK(g.order() == 6);
    QSeries c = qseries_from_yaml(qseries_to_yaml(QSeries::constant(rational(2, 3), 0)));
    CHECK(c.is_exact());
    CHECK_THROWS_AS(qseries_from_yaml("{weight: 4}"), std::invalid_argument);
    CHECK_THROWS_AS(qseries_from_yaml("[1, 2"), std::invalid_argument);
  }

  TEST_CASE("quasi-modular decomposition") {
    const int N = 12;
    QSeries e4 = eisenstein_q(2, N), e6 = eisenstein_q(3, N), e2 = eisenstein_q(1, N);
    auto d = quasi_modular_decompose((e4.pow(3) - e6 * e6) * rational(1, 1728));
    CHECK(d.render() == "(1/1728)·E4^3 - (1/1728)·E6^2");
    CHECK_FALSE(d.involves_e2());
    auto q = quasi_modular_decompose(e2 * e4 * Rational(5) + e6);
    CHECK(q.involves_e2());
    CHECK(q.e2_part().render() == "5·E2·E4");
    CHECK(q.without_e2().render() == "E6");
    CHECK(q.expand(N) == e2 * e4 * Rational(5) + e6);
    CHECK(quasi_modular_decompose(QSeries(2, 0, {}, N)).is_zero());
    CHECK(quasi_modular_basis(12).size() == 7);
    // a weakly holomorphic input has no polynomial decomposition
    QSeries pole(12, -1, {Rational(1), Rational(0), Rational(3)}, N);
    CHECK_THROWS_AS(quasi_modular_decompose(pole), NoDecomposition);
    // odd weight
    CHECK_THROWS_AS(quasi_modular_decompose(QSeries(3, 0, {Rational(1)}, N)), NoDecomposition);
    // right weight, not in the span
    QSeries junk(4, 0, {Rational(1), Rational(1)}, N);
    CHECK_THROWS_AS(quasi_modular_decompose(junk), NoDecomposition);
  }

  TEST_CASE("SL2(Z) elements") {
    Complex tau(0.3, 1.7);
    auto s = GammaElement::S();
    auto t = GammaElement::T();
    CHECK(std::abs(s.apply(tau) + 1.0 / tau) < 1e-15);
    CHECK(std::abs(t.apply(tau) - (tau + 1.0)) < 1e-15);
    auto st = s * t;
    CHECK(std::abs(st.apply(tau) - s.apply(t.apply(tau))) < 1e-14);
    CHECK_THROWS_AS(GammaElement(1, 1, 1, 1), std::invalid_argument);
  }

  TEST_CASE("lattice orderings") {
    CHECK_THROWS_AS(BlockIndex(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BlockIndex(-1, 0), std::invalid_argument);
    CHECK_NOTHROW(BlockIndex(1, 0));
    CHECK_NOTHROW(BlockIndex(-3, -1));
    for (auto ord : {LatticeOrdering::symmetric_shells(4), LatticeOrdering::paper_z2plus(4),
                     LatticeOrdering::row_major(4, 4, false)}) {
      long count = 0;
      bool all_plus = true;
      ord.for_each_z2plus([&](const LatticePoint& p) {
        ++count;
        all_plus = all_plus && p.in_z2plus();
      });
      CHECK(all_plus);
      CHECK(count == static_cast<long>(ord.z2plus_count()));
      CHECK(count == 40);
    }
    CHECK(LatticeOrdering::parse("row-major", 7).describe() == "row-major(rows=7,cols=7)");
    CHECK(LatticeOrdering::parse("shells", 7).describe() == "shells(7)");
    CHECK_THROWS_AS(LatticeOrdering::parse("spiral", 7), std::invalid_argument);
  }

  TEST_CASE("exact and floating lattice sums agree") {
    auto ord = LatticeOrdering::symmetric_shells(3);
    GaussianPi tau_exact(GaussianRational{0, 2});
    for (int k = 1; k <= 3; ++k) {
      Complex exact = lattice_partial_sum<GaussianPi>(2 * k, tau_exact, ord).to_complex();
      Complex fl = lattice_partial_sum<Complex>(2 * k, Complex(0.0, 2.0), ord);
      CHECK(std::abs(exact - fl) < 1e-13);
      Complex direct = oracle::square_lattice_sum(k, Complex(0.0, 2.0), 3);
      CHECK(std::abs(fl - direct) < 1e-13);
    }
  }

  TEST_CASE("odd powers cancel over symmetric orderings") {
    GaussianPi tau(GaussianRational{Rational(1, 5), 1});
    CHECK(lattice_partial_sum<GaussianPi>(3, tau, LatticeOrdering::symmetric_shells(3)).is_zero());
    CHECK(lattice_partial_sum<GaussianPi>(5, tau, LatticeOrdering::paper_z2plus(2)).is_zero());
  }

  TEST_CASE("lattice values approach the q-expansion for k >= 2") {
    for (Complex tau : {Complex(0.0, 1.0), Complex(0.25, 1.3)}) {
      for (int k = 2; k <= 4; ++k) {
        Complex lat = eisenstein_lattice(k, tau, LatticeOrdering::symmetric_shells(400));
        Complex ser = evaluate_at_tau(eisenstein_q(k, 30), tau);
        CHECK(std::abs(lat / two_zeta(k) - ser) < 1e-4);
        CHECK(std::abs(ser - oracle::eisenstein_value(k, tau, 30)) < 1e-12);
        // conditionally convergent only at k = 1; other orderings agree
        Complex rows = eisenstein_lattice(k, tau, LatticeOrdering::row_major(400, 400, false));
        CHECK(std::abs(lat - rows) < 1e-4);
      }
    }
    CHECK(two_zeta(1) == doctest::Approx(std::numbers::pi * std::numbers::pi / 3.0));
  }

  TEST_CASE("completed row-major ordering gives the holomorphic E2") {
    Complex tau(0.0, 1.0);
    Complex rows = eisenstein_lattice(1, tau, LatticeOrdering::row_major(200, 200, true));
    CHECK(std::abs(rows - std::numbers::pi) < 1e-6);
    Complex ser = evaluate_at_tau(eisenstein_q(1, 30), tau) * two_zeta(1);
    CHECK(std::abs(rows - ser) < 1e-6);
    // E2 transformation law holds only with its anomaly term
    Complex t2(0.1, 1.2);
    auto ord = default_ordering(1, 400);
    CHECK(std::abs(transform_residual(1, GammaElement::T(), t2, ord)) < 1e-6);
    CHECK(std::abs(transform_residual(1, GammaElement::S(), t2, ord)) < 1e-6);
    CHECK(std::abs(transform_residual(2, GammaElement::S(), t2, default_ordering(2, 400))) < 1e-5);
    CHECK_THROWS_AS(LatticeOrdering::row_major(10, 0, true), std::invalid_argument);
  }
}
