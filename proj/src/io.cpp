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

#include "modwit/io.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace modwit {

std::string qseries_to_yaml(const QSeries& f) {
  std::string out = "{weight: " + std::to_string(f.weight()) + ", min_exp: " + std::to_string(f.min_exp()) +
                    ", coeffs: [";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    out += (i ? ", " : "") + std::string("\"") + to_string(f.coeffs()[i]) + "\"";
  }
  out += "], order: ";
  out += f.is_exact() ? std::string("exact") : std::to_string(f.order());
  return out + "}";
}

QSeries qseries_from_yaml(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("series record is not valid YAML: ") + e.what());
  }
  if (!root.IsMap() || !root["weight"] || !root["coeffs"] || !root["order"]) {
    throw std::invalid_argument("series record needs weight, coeffs and order");
  }
  int weight = root["weight"].as<int>();
  int min_exp = root["min_exp"] ? root["min_exp"].as<int>() : 0;
  std::vector<Rational> coeffs;
  for (const auto& c : root["coeffs"]) coeffs.push_back(parse_rational(c.as<std::string>()));
  std::string order_text = root["order"].as<std::string>();
  int order = order_text == "exact" ? QSeries::kExact : std::stoi(order_text);
  return QSeries(weight, min_exp, std::move(coeffs), order);
}

QSeries load_qseries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read series file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return qseries_from_yaml(ss.str());
}

std::pair<std::string, std::string> complex_to_strings(Complex z) {
  return {format_double(z.real()), format_double(z.imag())};
}

Complex complex_from_strings(const std::string& re, const std::string& im) {
  return {std::stod(re), std::stod(im)};
}

}  // namespace modwit
