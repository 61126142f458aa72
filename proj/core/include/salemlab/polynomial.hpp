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

#ifndef SALEMLAB_POLYNOMIAL_HPP_
#define SALEMLAB_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "salemlab/number.hpp"

namespace salemlab {

// Univariate polynomial with arbitrary-precision integer coefficients.
//
// Coefficients are stored in ascending degree and kept trimmed, so the zero
// polynomial is the empty list and has no degree (degree() is nullopt).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial monomial(std::size_t degree, const Integer& coeff = 1);
  static IntPolynomial constant(const Integer& c);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  // Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // Coefficient list is a palindrome (x^d p(1/x) == p(x)).
  bool is_palindromic() const;

  Rational evaluate(const Rational& x) const;
  Integer evaluate(const Integer& x) const;
  int sign_at(const Rational& x) const;

  IntPolynomial derivative() const;
  // Coefficients reversed: x^d p(1/x).
  IntPolynomial reversed() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

  // Human-readable form in descending degree, e.g. "x^2-5x+1".
  std::string to_string() const;

  // Inverse of to_string. Also accepts TeX exponents ("x^{10}"), spaces and
  // repeated powers (which are summed). Throws InvalidArgument.
  static IntPolynomial parse(const std::string& text);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial pow(const IntPolynomial& p, std::size_t exponent);

// Exact quotient r with p == q * r, or nullopt when q does not divide p over
// the integers. Never returns a truncated quotient. Requires q monic (throws
// InvalidArgument otherwise).
std::optional<IntPolynomial> poly_exact_div(const IntPolynomial& p,
                                            const IntPolynomial& q);

// Sturm sequence of a nonzero polynomial, used to count distinct real roots
// on half-open intervals with exact sign evaluation.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  // Distinct real roots in (lower, upper]. nullopt bounds mean -inf / +inf.
  std::size_t count_roots(const std::optional<Rational>& lower,
                          const std::optional<Rational>& upper) const;
  std::size_t count_real_roots() const {
    return count_roots(std::nullopt, std::nullopt);
  }

  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::size_t sign_changes_at(const Rational& x) const;
  std::size_t sign_changes_at_infinity(bool positive) const;

  std::vector<IntPolynomial> chain_;
};

// True iff p has no repeated roots (gcd(p, p') is constant).
bool is_squarefree(const IntPolynomial& p);

// Upper bound on the absolute value of every complex root (Cauchy).
Rational root_bound(const IntPolynomial& p);

}  // namespace salemlab

#endif  // SALEMLAB_POLYNOMIAL_HPP_
