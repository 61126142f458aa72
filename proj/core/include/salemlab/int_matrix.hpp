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

#ifndef SALEMLAB_INT_MATRIX_HPP_
#define SALEMLAB_INT_MATRIX_HPP_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "salemlab/number.hpp"

namespace salemlab {

class RatVector;

// Square matrix of arbitrary-precision integers, stored row-major.
//
// Matrices act on column vectors of coordinates: column j of an isometry
// holds the image of basis vector j.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::size_t dim, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  const Integer& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Integer& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  const std::vector<Integer>& entries() const { return entries_; }

  IntMatrix transpose() const;
  Integer trace() const;
  bool is_identity() const;

  // Applies the matrix to a coordinate column vector.
  RatVector apply(const RatVector& v) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<Integer> entries_;
};

// Exact product. Throws DimensionMismatch when dims differ.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  return mat_mul(a, b);
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Integer& s, const IntMatrix& m);

// True iff m^T * gram * m == gram.
bool preserves_form(const IntMatrix& m, const IntMatrix& gram);

// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

}  // namespace salemlab

#endif  // SALEMLAB_INT_MATRIX_HPP_
