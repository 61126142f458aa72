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

#include "salemlab/linalg.hpp"

#include <utility>

#include "salemlab/error.hpp"

namespace salemlab {

IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I;  c_{n-k} = -tr(A M_k) / k.
  IntMatrix am(n);  // A * M_{k-1}, with M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    Integer tr = am.trace();
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), k)) {
      throw InvariantViolation("Faddeev-LeVerrier: inexact division");
    }
    mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -tr;
  }
  return IntPolynomial(std::move(c));
}

IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix acc(n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

RatVector solve_rational(const RatMatrix& a, const RatVector& rhs) {
  const std::size_t n = a.size();
  if (rhs.dim() != n) throw DimensionMismatch("solve_rational: rhs size");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionMismatch("solve_rational: not square");
  }
  // Gauss-Jordan on the augmented matrix.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(aug[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw SingularGram();
    std::swap(aug[col], aug[pivot]);
    const Rational inv = 1 / aug[col][col];
    for (std::size_t j = col; j <= n; ++j) aug[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(aug[i][col]) == 0) continue;
      const Rational factor = aug[i][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= factor * aug[col][j];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

RatVector solve_rational(const IntMatrix& gram, const RatVector& rhs) {
  if (rhs.dim() != gram.dim()) throw DimensionMismatch("solve_rational: rhs size");
  RatMatrix a(gram.dim(), std::vector<Rational>(gram.dim()));
  for (std::size_t i = 0; i < gram.dim(); ++i)
    for (std::size_t j = 0; j < gram.dim(); ++j) a[i][j] = gram(i, j);
  return solve_rational(a, rhs);
}

Rational bilinear(const IntMatrix& gram, const RatVector& v,
                  const RatVector& w) {
  if (v.dim() != gram.dim() || w.dim() != gram.dim()) {
    throw DimensionMismatch("inner product: dimension mismatch");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < gram.dim(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < gram.dim(); ++j) {
      if (sgn(gram(i, j)) != 0 && sgn(w[j]) != 0) row += Rational(gram(i, j)) * w[j];
    }
    acc += v[i] * row;
  }
  return acc;
}

}  // namespace salemlab
