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

#ifndef SALEMLAB_LATTICE_HPP_
#define SALEMLAB_LATTICE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "salemlab/int_matrix.hpp"
#include "salemlab/number.hpp"
#include "salemlab/rat_vector.hpp"

namespace salemlab {

// Coordinate models of the rank-10 even unimodular lattice of signature
// (1, 9). Vectors are coordinate columns in the model's basis; pairings go
// through the model's Gram matrix.

inline constexpr std::size_t kLatticeRank = 10;

struct LatticeModel {
  IntMatrix gram{kLatticeRank};
  std::vector<std::string> labels;
};

// v^T * gram * w, exact. Throws DimensionMismatch.
Rational inner(const LatticeModel& model, const RatVector& v,
               const RatVector& w);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Inertia of a symmetric form by congruence diagonalisation over Q.
// Throws InvalidArgument if gram is not symmetric.
Signature signature_check(const IntMatrix& gram);

// ---------------------------------------------------------------------------
// Isotropic 10-sequence basis (f_1, ..., f_10): (f_i, f_i) = 0, (f_i, f_j) = 1.
// The f_i only span an index-3 sublattice; delta = (f_1 + ... + f_10) / 3 has
// rational coordinates.

struct FBasisModel : LatticeModel {
  RatVector delta;
  RatVector f10;  // 3 delta - f_1 - ... - f_9
  // alpha_0 = delta - f_1 - f_2 - f_3, alpha_i = f_i - f_{i+1}; the simple
  // roots of the T-shaped Coxeter diagram. Informational only.
  std::vector<RatVector> simple_roots;

  // Basis vector f_i, 1-based.
  RatVector f(std::size_t i) const;
};

// Builds the model and checks every invariant; throws InvariantViolation.
FBasisModel build_f_model();
const FBasisModel& f_model();

// The (-2)-class r_{i,i+1} = f_i + f_{i+1} - f_{11-i}, i in 1..4.
struct NodalClass {
  std::size_t index = 0;
  RatVector coords;
};

NodalClass nodal_class(std::size_t i);

// ---------------------------------------------------------------------------
// Petersen basis: ten (-2)-classes U_ab indexed by 2-subsets of {1..5}.

struct Pair {
  int a = 0;
  int b = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// The fixed global order (12,13,14,15,23,24,25,34,35,45). Word letters and
// I/O use 1-based positions into this list.
inline constexpr std::array<Pair, 10> kPairs = {{{1, 2},
                                                 {1, 3},
                                                 {1, 4},
                                                 {1, 5},
                                                 {2, 3},
                                                 {2, 4},
                                                 {2, 5},
                                                 {3, 4},
                                                 {3, 5},
                                                 {4, 5}}};

// 0-based position in kPairs; throws InvalidArgument for an invalid pair.
std::size_t pair_index(Pair p);
Pair make_pair(int a, int b);  // normalises order, validates
// Parses a two-digit pair such as "12" or "21"; nullopt if malformed.
std::optional<Pair> parse_pair(const std::string& text);
std::string to_string(Pair p);
bool disjoint(Pair p, Pair q);
bool shares_one(Pair p, Pair q);

struct PetersenModel : LatticeModel {
  std::array<Pair, 10> pairs = kPairs;
  std::vector<RatVector> f_coords;      // f_ab, solved from (f_ab, U_cd)
  std::vector<RatVector> alpha_coords;  // alpha_ab = f_ab - U_ab
  RatVector delta;                      // sum of the U_ab

  RatVector u(Pair p) const;
  const RatVector& f(Pair p) const { return f_coords[pair_index(p)]; }
  const RatVector& alpha(Pair p) const { return alpha_coords[pair_index(p)]; }
};

PetersenModel build_petersen_model();
const PetersenModel& petersen_model();

}  // namespace salemlab

#endif  // SALEMLAB_LATTICE_HPP_
