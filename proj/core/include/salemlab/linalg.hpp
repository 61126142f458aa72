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

#ifndef SALEMLAB_LINALG_HPP_
#define SALEMLAB_LINALG_HPP_

#include <vector>

#include "salemlab/int_matrix.hpp"
#include "salemlab/polynomial.hpp"
#include "salemlab/rat_vector.hpp"

namespace salemlab {

// Characteristic polynomial det(x*I - m), monic of degree m.dim().
//
// Faddeev-LeVerrier recursion. Every division by k is exact for integer
// input, which is checked; a non-zero remainder throws InvariantViolation.
IntPolynomial char_poly(const IntMatrix& m);

// p(m) by Horner's rule.
IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& m);

// Exact solution x of gram * x = rhs. Throws SingularGram if gram is singular
// and DimensionMismatch if sizes disagree.
RatVector solve_rational(const IntMatrix& gram, const RatVector& rhs);

// Rational symmetric matrix helpers used by lattice and involution code.
using RatMatrix = std::vector<std::vector<Rational>>;

// Solves a * x = rhs over the rationals for a square rational matrix.
RatVector solve_rational(const RatMatrix& a, const RatVector& rhs);

// v^T * gram * w.
Rational bilinear(const IntMatrix& gram, const RatVector& v,
                  const RatVector& w);

}  // namespace salemlab

#endif  // SALEMLAB_LINALG_HPP_
