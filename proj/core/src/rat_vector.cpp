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

#include "salemlab/rat_vector.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "salemlab/error.hpp"

namespace salemlab {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty rational");
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw InvalidArgument("malformed rational '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("malformed rational '" + text + "'");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (sgn(den) == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  return make_rational(num, den);
}

RatVector::RatVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  for (auto& q : entries_) q.canonicalize();
}

RatVector::RatVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long v : entries) entries_.emplace_back(v);
}

RatVector RatVector::unit(std::size_t dim, std::size_t index) {
  RatVector v(dim);
  v[index] = 1;
  return v;
}

bool RatVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

bool RatVector::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

RatVector& RatVector::operator+=(const RatVector& other) {
  if (dim() != other.dim()) throw DimensionMismatch("vector sum");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& other) {
  if (dim() != other.dim()) throw DimensionMismatch("vector difference");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& q : entries_) q *= s;
  return *this;
}

std::string RatVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << entries_[i].get_str();
  }
  os << ')';
  return os.str();
}

RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
RatVector operator-(RatVector a) { return a *= Rational(-1); }
RatVector operator*(const Rational& s, RatVector v) { return v *= s; }

}  // namespace salemlab
