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

#include <string>
#include <utility>

#include "modwit/qseries.hpp"
#include "modwit/scalar.hpp"

namespace modwit {

// {weight: 4, min_exp: 0, coeffs: ["1", "240"], order: 2}; an exact
// series writes order: exact.
std::string qseries_to_yaml(const QSeries& f);
QSeries qseries_from_yaml(const std::string& text);
QSeries load_qseries(const std::string& path);

// Complex numbers as a pair of round-trip decimal strings.
std::pair<std::string, std::string> complex_to_strings(Complex z);
Complex complex_from_strings(const std::string& re, const std::string& im);

}  // namespace modwit
