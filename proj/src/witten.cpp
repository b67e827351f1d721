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

#include "modwit/witten.hpp"

#include "modwit/eisenstein.hpp"

namespace modwit {

namespace {

Rational hat_constant(int k) { return -bernoulli(2 * k) / Rational(factorial(2 * k)); }

}  // namespace

Element<Rational> witten_class_symbolic(const ChernRootModel& model) {
  const AlgebraPtr& alg = model.algebra();
  Element<Rational> exponent(alg);
  Element<Rational> b = model.gen("b");
  for (int k = 1; 4 * k <= model.dim(); ++k) {
    exponent += pontryagin_character_component(model, k) * b.pow(2 * k) * model.gen(eisenstein_name(k));
  }
  return exp_nilpotent(exponent);
}

std::map<std::string, QSeries> eisenstein_symbol_values(int kmax, int q_order) {
  std::map<std::string, QSeries> v;
  for (int k = 1; k <= kmax; ++k) v[eisenstein_name(k)] = eisenstein_hat(k, q_order);
  return v;
}

Element<QSeries> witten_class(const ChernRootModel& model, int q_order) {
  if (q_order < 1) throw std::invalid_argument("q-order must be positive");
  return specialize<QSeries>(witten_class_symbolic(model),
                             eisenstein_symbol_values(model.eisenstein_count(), q_order));
}

Element<Rational> witten_class_q0(const ChernRootModel& model) {
  std::map<std::string, Rational> v{{"b", Rational(1)}};
  for (int k = 1; k <= model.eisenstein_count(); ++k) v[eisenstein_name(k)] = hat_constant(k);
  return specialize<Rational>(witten_class_symbolic(model), v);
}

namespace {

struct GenusAlgebra {
  AlgebraPtr alg;
  int kmax;
};

GenusAlgebra make_genus_algebra(int dim) {
  int K = std::max(1, dim / 4);
  std::vector<GeneratorSpec> gens;
  for (int k = 1; k <= K; ++k) {
    gens.push_back({eisenstein_name(k), 0, 2 * k, false, ""});
    gens.push_back({pontryagin_name(k), 4 * k, 0, false, ""});
    gens.push_back({power_sum_name(k), 4 * k, 0, false, ""});
  }
  gens.push_back({"b", 0, -1, true, ""});
  return {Algebra::create(std::move(gens), dim), K};
}

}  // namespace

Element<Rational> witten_genus_symbolic(const ManifoldDescriptor& d) {
  d.validate();
  GenusAlgebra ga = make_genus_algebra(d.dim);
  const AlgebraPtr& alg = ga.alg;
  Element<Rational> b = Element<Rational>::generator(alg, "b");
  Element<Rational> exponent(alg);
  for (int k = 1; 4 * k <= d.dim; ++k) {
    // ph(k) = s_k / k
    exponent += (Element<Rational>::generator(alg, power_sum_name(k)) * b.pow(2 * k) *
                 Element<Rational>::generator(alg, eisenstein_name(k)))
                    .scaled(Rational(1, k));
  }
  Element<Rational> wit = exp_nilpotent(exponent);
  std::map<std::string, Element<Rational>> images;
  if (d.dim >= 4) {
    NewtonTable table = power_sums_to_pontryagin(d.dim / 4);
    for (int k = 1; k <= table.k_max; ++k) {
      images.emplace(power_sum_name(k), substitute(table.s_in_p[static_cast<std::size_t>(k - 1)], alg, {}));
    }
  }
  Element<Rational> in_p = substitute(wit, alg, images);
  Element<Rational> residual = integrate(d, in_p);
  for (const auto& [m, c] : residual.terms()) {
    int g_weight = 0;
    for (int k = 1; k <= ga.kmax; ++k) g_weight += 2 * k * exponent_of(*alg, m, eisenstein_name(k));
    int b_exp = exponent_of(*alg, m, "b");
    if (g_weight != d.dim / 2 || b_exp != d.dim / 2) {
      throw std::logic_error("genus monomial " + alg->render_monomial(m) + " has Eisenstein weight " +
                             std::to_string(g_weight) + ", expected " + std::to_string(d.dim / 2));
    }
  }
  return specialize<Rational>(residual, std::map<std::string, Rational>{{"b", Rational(1)}});
}

QSeries witten_genus(const ManifoldDescriptor& d, int q_order) {
  if (q_order < 1) throw std::invalid_argument("q-order must be positive");
  Element<Rational> sym = witten_genus_symbolic(d);
  int kmax = std::max(1, d.dim / 4);
  Element<QSeries> val = specialize<QSeries>(sym, eisenstein_symbol_values(kmax, q_order));
  QSeries g = val.coefficient(Monomial{});
  if (g.is_zero()) return QSeries(d.dim / 2, 0, {}, q_order);
  if (g.weight() != d.dim / 2) throw std::logic_error("genus weight differs from dim/2");
  return g;
}

Element<Rational> modular_transform(const ChernRootModel& model, const Element<Rational>& a) {
  const AlgebraPtr& alg = model.algebra();
  Element<Rational> j = model.gen("j");
  Element<Rational> jinv = Element<Rational>::generator(alg, "j", -1);
  std::map<std::string, Element<Rational>> images;
  images.emplace("b", model.gen("b") * jinv);
  images.emplace(eisenstein_name(1), j.pow(2) * (model.gen(eisenstein_name(1)) - model.gen("u")));
  for (int k = 2; k <= model.eisenstein_count(); ++k) {
    images.emplace(eisenstein_name(k), j.pow(2 * k) * model.gen(eisenstein_name(k)));
  }
  return substitute(a, alg, images);
}

Element<Rational> anomaly_delta_symbolic(const ChernRootModel& model) {
  Element<Rational> wit = witten_class_symbolic(model);
  Element<Rational> delta = wit - modular_transform(model, wit);
  for (const auto& [m, c] : delta.terms()) {
    if (exponent_of(*model.algebra(), m, "j") != 0) {
      throw std::logic_error("automorphy factor did not cancel in " + model.algebra()->render_monomial(m));
    }
  }
  return delta;
}

Element<QSeries> anomaly_delta(const ChernRootModel& model, int q_order) {
  return specialize<QSeries>(anomaly_delta_symbolic(model),
                             eisenstein_symbol_values(model.eisenstein_count(), q_order));
}

Element<Rational> anomaly_kernel(const ChernRootModel& model) {
  // one extra form degree so the quotient keeps every term up to dim
  AlgebraPtr helper = Algebra::create(
      {{"P", 4, 0, false, ""}, {"b", 0, -1, true, ""}, {"u", 0, 2, false, ""}}, model.dim() + 4);
  Element<Rational> P = Element<Rational>::generator(helper, "P");
  Element<Rational> t = P * Element<Rational>::generator(helper, "b").pow(2) * Element<Rational>::generator(helper, "u");
  Element<Rational> numerator = Element<Rational>::constant(helper, 1) - exp_nilpotent(-t);
  Element<Rational> quotient = divide_exact(numerator, P);
  return substitute(quotient, model.algebra(), {{"P", model.p1()}});
}

Element<Rational> anomaly_primitive_symbolic(const ChernRootModel& model) {
  return model.gen("H") * witten_class_symbolic(model) * anomaly_kernel(model);
}

Element<QSeries> anomaly_primitive(const ChernRootModel& model, int q_order) {
  Element<QSeries> H = lift<QSeries>(model.gen("H"));
  return H * witten_class(model, q_order) * lift<QSeries>(anomaly_kernel(model));
}

AnomalyCheck verify_anomaly(const ChernRootModel& model, int q_order) {
  AnomalyCheck r;
  Element<Rational> delta = anomaly_delta_symbolic(model);
  Element<Rational> prim = anomaly_primitive_symbolic(model);
  r.symbolic_ok = differential(prim) == delta;
  Element<QSeries> delta_q = anomaly_delta(model, q_order);
  Element<QSeries> prim_q = anomaly_primitive(model, q_order);
  r.series_ok = differential(prim_q) == delta_q;
  r.vanishes_mod_p1 = model.roots() == 0 ? delta.is_zero() : impose_relation(delta, model.p1()).is_zero();
  r.delta = delta.render();
  r.primitive = prim.render();
  return r;
}

namespace {

QuasiModularPolynomial multiply(const QuasiModularPolynomial& a, const QuasiModularPolynomial& b) {
  QuasiModularPolynomial r{a.weight + b.weight, {}};
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      QmMonomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      r.terms[m] += ca * cb;
    }
  }
  std::erase_if(r.terms, [](const auto& kv) { return kv.second == 0; });
  return r;
}

QuasiModularPolynomial normalized_eisenstein(int k) {
  QuasiModularPolynomial p{2 * k, {}};
  if (k <= 3) {
    QmMonomial m{0, 0, 0};
    m[static_cast<std::size_t>(k - 1)] = 1;
    p.terms[m] = 1;
    return p;
  }
  int count = static_cast<int>(quasi_modular_basis(2 * k).size());
  return quasi_modular_decompose(eisenstein_q(k, count + 4));
}

}  // namespace

QuasiModularPolynomial to_normalized_basis(const Element<Rational>& genus_symbolic, int weight) {
  const AlgebraPtr& alg = genus_symbolic.algebra();
  QuasiModularPolynomial total{weight, {}};
  for (const auto& [m, c] : genus_symbolic.terms()) {
    QuasiModularPolynomial term{0, {{QmMonomial{0, 0, 0}, c}}};
    for (int k = 1;; ++k) {
      int idx = alg->index_of(eisenstein_name(k));
      if (idx < 0) break;
      int e = m.e[static_cast<std::size_t>(idx)];
      for (int t = 0; t < e; ++t) {
        QuasiModularPolynomial g = normalized_eisenstein(k);
        for (auto& [mm, cc] : g.terms) cc *= hat_constant(k);
        term = multiply(term, g);
      }
    }
    for (const auto& [mm, cc] : term.terms) total.terms[mm] += cc;
  }
  std::erase_if(total.terms, [](const auto& kv) { return kv.second == 0; });
  return total;
}

StringReport string_modularity_check(const ManifoldDescriptor& d, int q_order) {
  StringReport r;
  r.weight = d.dim / 2;
  Element<Rational> sym = witten_genus_symbolic(d);
  r.genus = witten_genus(d, q_order);
  r.decomposition = quasi_modular_decompose(r.genus.with_weight(r.weight));
  r.e2_part = r.decomposition.e2_part();
  r.modular = !r.decomposition.involves_e2();
  r.symbolic_agrees = to_normalized_basis(sym, r.weight) == r.decomposition;
  return r;
}

}  // namespace modwit
