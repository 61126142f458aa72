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

#ifndef SALEMLAB_RAT_VECTOR_HPP_
#define SALEMLAB_RAT_VECTOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "salemlab/number.hpp"

namespace salemlab {

// Column vector of exact rationals in some lattice basis.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : entries_(dim) {}
  explicit RatVector(std::vector<Rational> entries);
  RatVector(std::initializer_list<long> entries);

  static RatVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_integral() const;

  RatVector& operator+=(const RatVector& other);
  RatVector& operator-=(const RatVector& other);
  RatVector& operator*=(const Rational& s);

  friend bool operator==(const RatVector& a, const RatVector& b) {
    return a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::vector<Rational> entries_;
};

RatVector operator+(RatVector a, const RatVector& b);
RatVector operator-(RatVector a, const RatVector& b);
RatVector operator-(RatVector a);
RatVector operator*(const Rational& s, RatVector v);

}  // namespace salemlab

#endif  // SALEMLAB_RAT_VECTOR_HPP_
