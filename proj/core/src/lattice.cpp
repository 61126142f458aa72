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

#include "salemlab/lattice.hpp"

#include <utility>

#include "salemlab/error.hpp"
#include "salemlab/linalg.hpp"

namespace salemlab {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

RatVector ones(std::size_t n) {
  RatVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1;
  return v;
}

void require_integral_pairings(const LatticeModel& model,
                               const std::vector<RatVector>& vectors,
                               const std::string& what) {
  for (const auto& v : vectors)
    for (const auto& w : vectors)
      require(is_integral(inner(model, v, w)), what + ": non-integral pairing");
}

}  // namespace

Rational inner(const LatticeModel& model, const RatVector& v,
               const RatVector& w) {
  return bilinear(model.gram, v, w);
}

Signature signature_check(const IntMatrix& gram) {
  const std::size_t n = gram.dim();
  RatMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) {
        throw InvalidArgument("signature_check: Gram matrix is not symmetric");
      }
      a[i][j] = gram(i, j);
    }
  }
  auto swap_index = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t j = k + 1;
      while (j < n && sgn(a[j][j]) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && sgn(a[k][j]) == 0) ++j;
        if (j == n) {
          ++sig.zero;  // row k is zero on the remaining block
          continue;
        }
        // e_k -> e_k + e_j makes the diagonal entry 2 a_kj.
        for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
      }
    }
    const Rational pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a[i][k]) == 0) continue;
      const Rational factor = a[i][k] / pivot;
      for (std::size_t c = k; c < n; ++c) a[i][c] -= factor * a[k][c];
      for (std::size_t r = k; r < n; ++r) a[r][i] -= factor * a[r][k];
    }
    (sgn(pivot) > 0 ? sig.positive : sig.negative) += 1;
  }
  return sig;
}

RatVector FBasisModel::f(std::size_t i) const {
  if (i < 1 || i > kLatticeRank) throw InvalidArgument("f index out of range");
  return RatVector::unit(kLatticeRank, i - 1);
}

FBasisModel build_f_model() {
  FBasisModel m;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    for (std::size_t j = 0; j < kLatticeRank; ++j) m.gram(i, j) = i == j ? 0 : 1;
    m.labels.push_back("f" + std::to_string(i + 1));
  }
  m.delta = make_rational(1, 3) * ones(kLatticeRank);
  m.f10 = Rational(3) * m.delta;
  for (std::size_t i = 1; i <= 9; ++i) m.f10 -= m.f(i);

  m.simple_roots.push_back(m.delta - m.f(1) - m.f(2) - m.f(3));
  for (std::size_t i = 1; i <= 9; ++i) m.simple_roots.push_back(m.f(i) - m.f(i + 1));

  for (std::size_t i = 1; i <= kLatticeRank; ++i) {
    for (std::size_t j = 1; j <= kLatticeRank; ++j) {
      require(inner(m, m.f(i), m.f(j)) == (i == j ? 0 : 1), "f-model: (f_i, f_j)");
    }
    require(inner(m, m.delta, m.f(i)) == 3, "f-model: (delta, f_i) != 3");
  }
  require(inner(m, m.delta, m.delta) == 10, "f-model: delta^2 != 10");
  require(m.f10 == m.f(10), "f-model: f_10 != 3 delta - f_1 - ... - f_9");
  for (const auto& alpha : m.simple_roots) {
    require(inner(m, alpha, alpha) == -2, "f-model: simple root norm");
  }
  require(signature_check(m.gram) == Signature{1, 9, 0}, "f-model: signature");
  return m;
}

const FBasisModel& f_model() {
  static const FBasisModel model = build_f_model();
  return model;
}

NodalClass nodal_class(std::size_t i) {
  if (i < 1 || i > 4) throw InvalidArgument("nodal class index must be in 1..4");
  const FBasisModel& m = f_model();
  NodalClass r{i, m.f(i) + m.f(i + 1) - m.f(11 - i)};
  require(inner(m, r.coords, r.coords) == -2, "nodal class: norm != -2");
  require(inner(m, r.coords, m.f(i)) == 0 && inner(m, r.coords, m.f(i + 1)) == 0,
          "nodal class: not orthogonal to f_i, f_{i+1}");
  return r;
}

std::size_t pair_index(Pair p) {
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    if (kPairs[k] == p) return k;
  }
  throw InvalidArgument("invalid pair " + to_string(p));
}

Pair make_pair(int a, int b) {
  if (a > b) std::swap(a, b);
  Pair p{a, b};
  if (a < 1 || b > 5 || a == b) throw InvalidArgument("invalid pair " + to_string(p));
  return p;
}

std::optional<Pair> parse_pair(const std::string& text) {
  if (text.size() != 2) return std::nullopt;
  const int a = text[0] - '0';
  const int b = text[1] - '0';
  if (a < 1 || a > 5 || b < 1 || b > 5 || a == b) return std::nullopt;
  return make_pair(a, b);
}

std::string to_string(Pair p) {
  return std::to_string(p.a) + std::to_string(p.b);
}

bool disjoint(Pair p, Pair q) {
  return p.a != q.a && p.a != q.b && p.b != q.a && p.b != q.b;
}

bool shares_one(Pair p, Pair q) { return !(p == q) && !disjoint(p, q); }

RatVector PetersenModel::u(Pair p) const {
  return RatVector::unit(kLatticeRank, pair_index(p));
}

PetersenModel build_petersen_model() {
  PetersenModel m;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      m.gram(i, j) = i == j ? -2 : (disjoint(kPairs[i], kPairs[j]) ? 1 : 0);
    }
    m.labels.push_back("U" + to_string(kPairs[i]));
  }
  require(determinant(m.gram) == -256, "Petersen model: det != -256");
  require(signature_check(m.gram) == Signature{1, 9, 0}, "Petersen model: signature");

  // (f_ab, U_cd) = 1 iff the pairs are disjoint.
  for (Pair p : kPairs) {
    RatVector rhs(kLatticeRank);
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      rhs[j] = disjoint(p, kPairs[j]) ? 1 : 0;
    }
    m.f_coords.push_back(solve_rational(m.gram, rhs));
    m.alpha_coords.push_back(m.f_coords.back() - m.u(p));
  }
  m.delta = ones(kLatticeRank);

  RatVector f_sum(kLatticeRank);
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    const Pair p = kPairs[i];
    f_sum += m.f_coords[i];
    require(inner(m, m.delta, m.u(p)) == 1, "Petersen model: (delta, U_ab) != 1");
    for (std::size_t j = 0; j < kLatticeRank; ++j) {
      const Pair q = kPairs[j];
      require(inner(m, m.f_coords[i], m.f_coords[j]) == (i == j ? 0 : 1),
              "Petersen model: f_ab not an isotropic 10-sequence");
      require(inner(m, m.f_coords[i], m.u(q)) == (disjoint(p, q) ? 1 : 0),
              "Petersen model: (f_ab, U_cd)");
      const Rational expected = i == j ? -2 : (disjoint(p, q) ? 0 : 1);
      require(inner(m, m.alpha_coords[i], m.alpha_coords[j]) == expected,
              "Petersen model: anti-Petersen relations");
    }
  }
  require(inner(m, m.delta, m.delta) == 10, "Petersen model: delta^2 != 10");
  require(f_sum == Rational(3) * m.delta, "Petersen model: sum f_ab != 3 delta");

  std::vector<RatVector> all = m.f_coords;
  all.insert(all.end(), m.alpha_coords.begin(), m.alpha_coords.end());
  for (Pair p : kPairs) all.push_back(m.u(p));
  all.push_back(m.delta);
  require_integral_pairings(m, all, "Petersen model");
  return m;
}

const PetersenModel& petersen_model() {
  static const PetersenModel model = build_petersen_model();
  return model;
}

}  // namespace salemlab
