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

#include "salemlab/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "salemlab/error.hpp"
#include "salemlab/rat_vector.hpp"

namespace salemlab {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw InvalidArgument("matrix dimension must be positive");
}

IntMatrix::IntMatrix(std::size_t dim, std::vector<Integer> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw InvalidArgument("matrix dimension must be positive");
  if (entries_.size() != dim * dim) {
    throw DimensionMismatch("expected " + std::to_string(dim * dim) +
                            " entries, got " +
                            std::to_string(entries_.size()));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("matrix is not square");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RatVector IntMatrix::apply(const RatVector& v) const {
  if (v.dim() != dim_) throw DimensionMismatch("matrix/vector size mismatch");
  RatVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn((*this)(i, j)) != 0) acc += Rational((*this)(i, j)) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  return std::lexicographical_compare(
      a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
      b.entries_.end(),
      [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dim_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b(k, j)) == 0) continue;
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix sum");
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = -a(i, j);
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& m) {
  IntMatrix c(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) c(i, j) = s * m(i, j);
  return c;
}

bool preserves_form(const IntMatrix& m, const IntMatrix& gram) {
  if (m.dim() != gram.dim()) throw DimensionMismatch("preserves_form");
  return m.transpose() * gram * m == gram;
}

Integer determinant(const IntMatrix& m) {
  // Bareiss: every division below is exact.
  const std::size_t n = m.dim();
  std::vector<Integer> a = m.entries();
  auto at = [&](std::size_t i, std::size_t j) -> Integer& {
    return a[i * n + j];
  };
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(at(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = t;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  // FNV-1a over the limbs of every entry, with the sign folded in.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(m.dim());
  for (const Integer& z : m.entries()) {
    const mpz_srcptr p = z.get_mpz_t();
    mix(static_cast<std::size_t>(p->_mp_size));
    const int limbs = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
    for (int i = 0; i < limbs; ++i) mix(static_cast<std::size_t>(p->_mp_d[i]));
  }
  return h;
}

}  // namespace salemlab
