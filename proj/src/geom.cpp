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

#include "modwit/geom.hpp"
#include "modwit/lattice.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

namespace modwit {

std::string root_name(int j) { return "x" + std::to_string(j); }
std::string eisenstein_name(int k) { return "G" + std::to_string(2 * k); }
std::string pontryagin_name(int i) { return "p" + std::to_string(i); }
std::string power_sum_name(int i) { return "s" + std::to_string(i); }

template <>
Complex two_pi<Complex>() {
  return 2.0 * std::numbers::pi;
}

ChernRootModel::ChernRootModel(int roots, int dim) : roots_(roots), dim_(dim) {
  if (roots < 0) throw std::invalid_argument("number of roots must be non-negative");
  if (dim < 0 || dim % 2 != 0) throw std::invalid_argument("model dimension must be even and non-negative");
  kmax_ = std::max(1, dim / 4);
  std::vector<GeneratorSpec> gens;
  for (int k = 1; k <= kmax_; ++k) gens.push_back({eisenstein_name(k), 0, 2 * k, false, ""});
  gens.push_back({"b", 0, -1, true, ""});
  gens.push_back({"j", 0, 1, true, ""});
  gens.push_back({"u", 0, 2, false, ""});
  std::string dh;
  for (int j = 1; j <= roots; ++j) {
    gens.push_back({root_name(j), 2, 0, false, ""});
    dh += (j > 1 ? " + " : "") + root_name(j) + "^2";
  }
  // H only enters when it can pair with p1 below the truncation degree
  gens.push_back({"H", 3, 0, false, roots > 0 ? dh : ""});
  alg_ = Algebra::create(std::move(gens), dim);
}

Element<Rational> ChernRootModel::root(int j) const {
  if (j < 1 || j > roots_) throw std::out_of_range("root index out of range");
  return Element<Rational>::generator(alg_, root_name(j));
}

Element<Rational> ChernRootModel::p1() const {
  Element<Rational> acc(alg_);
  for (int j = 1; j <= roots_; ++j) acc += root(j).pow(2);
  return acc;
}

namespace {

Matrix<Element<GaussianPi>> matrix_power(const Matrix<Element<GaussianPi>>& R, int e) {
  Matrix<Element<GaussianPi>> P = identity_like(R.rows(), R(0, 0));
  for (int i = 0; i < e; ++i) P = P * R;
  return P;
}

}  // namespace

Element<Rational> pontryagin_character_component(const ChernRootModel& model, int k) {
  if (k < 1) throw std::invalid_argument("Pontryagin character index must be positive");
  if (model.roots() == 0) return Element<Rational>(model.algebra());
  auto R = model.curvature<GaussianPi>();
  Element<GaussianPi> tr = trace(matrix_power(R, 2 * k));
  GaussianPi denom = GaussianPi(Rational(2 * k)) * power_of(two_pi_i<GaussianPi>(), 2 * k);
  return project_rational(tr.scaled(*denom.inverse()));
}

Element<Rational> first_pontryagin_from_curvature(const ChernRootModel& model) {
  if (model.roots() == 0) return Element<Rational>(model.algebra());
  auto R = model.curvature<GaussianPi>();
  Element<GaussianPi> tr = trace(R * R);
  GaussianPi scale = -*(GaussianPi(Rational(8)) * GaussianPi::pi(2)).inverse();
  return project_rational(tr.scaled(scale));
}

NewtonTable power_sums_to_pontryagin(int k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  std::vector<GeneratorSpec> gens;
  for (int i = 1; i <= k_max; ++i) {
    gens.push_back({pontryagin_name(i), 4 * i, 0, false, ""});
    gens.push_back({power_sum_name(i), 4 * i, 0, false, ""});
  }
  NewtonTable t{k_max, Algebra::create(std::move(gens), 4 * k_max), {}, {}};
  auto p = [&](int i) { return Element<Rational>::generator(t.algebra, pontryagin_name(i)); };
  auto s = [&](int i) { return Element<Rational>::generator(t.algebra, power_sum_name(i)); };
  // s_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k
  for (int k = 1; k <= k_max; ++k) {
    Element<Rational> acc = p(k).scaled(Rational(k % 2 == 1 ? k : -k));
    for (int i = 1; i < k; ++i) {
      Element<Rational> term = p(i) * t.s_in_p[static_cast<std::size_t>(k - i - 1)];
      acc += (i % 2 == 1) ? term : -term;
    }
    t.s_in_p.push_back(acc);
  }
  // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} s_i
  for (int k = 1; k <= k_max; ++k) {
    Element<Rational> acc(t.algebra);
    for (int i = 1; i <= k; ++i) {
      Element<Rational> e = (k - i == 0) ? Element<Rational>::constant(t.algebra, 1)
                                         : t.p_in_s[static_cast<std::size_t>(k - i - 1)];
      Element<Rational> term = e * s(i);
      acc += (i % 2 == 1) ? term : -term;
    }
    t.p_in_s.push_back(acc.scaled(Rational(1, k)));
  }
  return t;
}

Partition canonical_partition(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

std::string partition_key(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out;
}

Partition parse_partition(const std::string& key) {
  Partition p;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto b = part.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t used = 0;
    int v = std::stoi(part.substr(b), &used);
    if (v <= 0) throw std::invalid_argument("partition parts must be positive: '" + key + "'");
    p.push_back(v);
  }
  return canonical_partition(p);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

void ManifoldDescriptor::validate() const {
  if (dim < 0 || dim % 4 != 0) throw std::invalid_argument("descriptor dimension must be divisible by 4");
  for (const auto& [p, v] : pontryagin_numbers) {
    int total = 0;
    for (int x : p) total += x;
    if (total != dim / 4) {
      throw std::invalid_argument("partition " + partition_key(p) + " is not a partition of " +
                                  std::to_string(dim / 4));
    }
  }
}

Rational ManifoldDescriptor::number(const Partition& p) const {
  auto it = pontryagin_numbers.find(canonical_partition(p));
  if (it != pontryagin_numbers.end()) return it->second;
  if (p.empty() && dim == 0) return 1;
  throw MissingNumber("no Pontryagin number for partition (" + partition_key(p) + ")");
}

ManifoldDescriptor parse_descriptor(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("descriptor is not valid YAML: ") + e.what());
  }
  if (!root.IsMap() || !root["dim"]) throw std::invalid_argument("descriptor needs a 'dim' field");
  ManifoldDescriptor d;
  d.dim = root["dim"].as<int>();
  if (auto nums = root["pontryagin_numbers"]) {
    if (!nums.IsMap()) throw std::invalid_argument("'pontryagin_numbers' must be a mapping");
    for (const auto& kv : nums) {
      Partition p = parse_partition(kv.first.as<std::string>());
      d.pontryagin_numbers[p] = parse_rational(kv.second.as<std::string>());
    }
  }
  d.validate();
  return d;
}

ManifoldDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read descriptor file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

std::string descriptor_to_yaml(const ManifoldDescriptor& d) {
  std::string out = "{dim: " + std::to_string(d.dim) + ", pontryagin_numbers: {";
  bool first = true;
  for (const auto& [p, v] : d.pontryagin_numbers) {
    out += (first ? "" : ", ") + std::string("\"") + partition_key(p) + "\": \"" + to_string(v) + "\"";
    first = false;
  }
  return out + "}}";
}

ManifoldDescriptor product_descriptor(const ManifoldDescriptor& x, const ManifoldDescriptor& y) {
  x.validate();
  y.validate();
  const int kx = x.dim / 4;
  const int ky = y.dim / 4;
  const int k = kx + ky;
  ManifoldDescriptor out{x.dim + y.dim, {}};
  if (k == 0) {
    out.pontryagin_numbers[{}] = x.number({}) * y.number({});
    return out;
  }
  std::vector<GeneratorSpec> gens;
  for (int i = 1; i <= k; ++i) {
    gens.push_back({"a" + std::to_string(i), 4 * i, 0, false, ""});
    gens.push_back({"c" + std::to_string(i), 4 * i, 0, false, ""});
  }
  AlgebraPtr alg = Algebra::create(std::move(gens), 4 * k);
  auto a = [&](int i) {
    return i == 0 ? Element<Rational>::constant(alg, 1) : Element<Rational>::generator(alg, "a" + std::to_string(i));
  };
  auto c = [&](int i) {
    return i == 0 ? Element<Rational>::constant(alg, 1) : Element<Rational>::generator(alg, "c" + std::to_string(i));
  };
  for (const Partition& lambda : partitions_of(k)) {
    Element<Rational> prod = Element<Rational>::constant(alg, 1);
    for (int part : lambda) {
      Element<Rational> whitney(alg);
      for (int i = 0; i <= part; ++i) whitney += a(i) * c(part - i);
      prod = prod * whitney;
    }
    Rational total = 0;
    for (const auto& [m, coef] : prod.terms()) {
      Partition px;
      Partition py;
      int dx = 0;
      for (int i = 1; i <= k; ++i) {
        int ea = exponent_of(*alg, m, "a" + std::to_string(i));
        int ec = exponent_of(*alg, m, "c" + std::to_string(i));
        for (int t = 0; t < ea; ++t) px.push_back(i);
        for (int t = 0; t < ec; ++t) py.push_back(i);
        dx += 4 * i * ea;
      }
      if (dx != x.dim) continue;
      total += coef * x.number(canonical_partition(px)) * y.number(canonical_partition(py));
    }
    out.pontryagin_numbers[lambda] = total;
  }
  return out;
}

}  // namespace modwit
