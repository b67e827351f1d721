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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modwit {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and plain decimals such as "-0.125" or "2.5e-3".
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

Integer factorial(int n);

// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(int n);

// Sum of d^p over positive divisors d of n.
Integer divisor_sigma(int p, long n);

inline Rational rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace modwit
