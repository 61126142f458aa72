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

#ifndef SALEMLAB_SALEM_HPP_
#define SALEMLAB_SALEM_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "salemlab/number.hpp"
#include "salemlab/polynomial.hpp"

namespace salemlab {

// Splitting of a characteristic polynomial into cyclotomic factors and a
// residual, following the structure theorem for isometries of hyperbolic
// lattices: at most one Salem factor, everything else cyclotomic.

enum class Classification { kUnit, kSalem, kAnomalous };

const char* to_string(Classification c);

struct CyclotomicFactor {
  unsigned index = 0;         // n in Phi_n
  unsigned multiplicity = 0;

  friend bool operator==(const CyclotomicFactor&,
                         const CyclotomicFactor&) = default;
};

struct FactorizationReport {
  IntPolynomial input;
  std::vector<CyclotomicFactor> cyclotomic_part;  // ascending index
  IntPolynomial residual;
  Classification classification = Classification::kAnomalous;

  // Product of Phi_n^mult over cyclotomic_part, times the residual.
  IntPolynomial reconstruct() const;
};

// Certified enclosure lower <= lambda <= upper of the largest real root.
struct SpectralRadius {
  Rational lower;
  Rational upper;
  std::string decimal_hint;  // lower bound truncated to 12 places

  double approx() const { return lower.get_d(); }
  // Lower bound truncated (not rounded) to `places` decimals.
  std::string truncated(unsigned places) const;
};

// Euler totient.
unsigned euler_phi(unsigned n);

// All n with phi(n) <= degree, ascending.
std::vector<unsigned> cyclotomic_candidates(std::size_t degree);

// n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d for every proper
// divisor d of n. Throws InvalidArgument for n == 0.
IntPolynomial cyclotomic(unsigned n);

// Divides out every Phi_n with phi(n) <= deg(p) to maximal multiplicity and
// classifies the residual. Requires p monic and nonzero.
FactorizationReport strip_cyclotomic(const IntPolynomial& p);

// Root-geometry classification of a residual without cyclotomic factors.
//
// kSalem means: palindromic of even degree 2k, squarefree, and the trace
// polynomial Q (p(x) = x^k Q(x + 1/x)) has exactly one real root above 2 and
// k-1 real roots in (-2, 2). Those conditions are decided by Sturm counts and
// are equivalent to one real root > 1, one in (0, 1) and the rest on the unit
// circle. Irreducibility is not checked; the contract assumes the input comes
// from a lattice isometry, where at most one Salem factor can occur.
Classification classify_residual(const IntPolynomial& p);

// Trace polynomial Q of a palindromic polynomial of even degree 2k.
IntPolynomial trace_polynomial(const IntPolynomial& p);

// Largest real root of a Salem polynomial, certified to width <= 1e-12.
// The root y0 > 2 of the trace polynomial is isolated first and mapped to
// lambda = (y0 + sqrt(y0^2 - 4)) / 2; the enclosure is then refined by exact
// sign evaluation of p. Throws NotSalem if p is not classified kSalem.
SpectralRadius spectral_radius(const IntPolynomial& p);

// 10^-12, the maximum enclosure width.
const Rational& spectral_radius_tolerance();

}  // namespace salemlab

#endif  // SALEMLAB_SALEM_HPP_
