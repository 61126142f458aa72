/* Copyright 2026 The salemlab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SALEMLAB_NUMBER_HPP_
#define SALEMLAB_NUMBER_HPP_

#include <gmpxx.h>

#include <string>

namespace salemlab {

// Arbitrary-precision integers and rationals. mpq_class keeps every value in
// canonical form (coprime, positive denominator) after each operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Parses "p", "-p" or "p/q". Throws InvalidArgument on malformed input or a
// zero denominator.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace salemlab

#endif  // SALEMLAB_NUMBER_HPP_
