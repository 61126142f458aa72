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

#ifndef SALEMLAB_INVOLUTION_HPP_
#define SALEMLAB_INVOLUTION_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "salemlab/int_matrix.hpp"
#include "salemlab/lattice.hpp"
#include "salemlab/rat_vector.hpp"

namespace salemlab {

// ---------------------------------------------------------------------------
// Deck transformation on the exceptional fibre of a double cover.

enum class DiagramType { kA, kD, kE };

// Permutation of the components of an A_n, D_n or E_n configuration induced
// by the covering involution. permutation[i] is the 0-based image of
// component i, using the labelling a_1..a_n, d_1..d_n, e_1..e_n.
struct SigmaAction {
  DiagramType type = DiagramType::kA;
  std::size_t n = 0;
  std::vector<std::size_t> permutation;
};

// A_n: a_i -> a_{n+1-i}. D_n: identity for even n, swaps d_1, d_2 for odd n.
// E_6: e_1 fixed, e_i -> e_{8-i}. E_7, E_8: identity.
// Throws InvalidArgument for A_0, D_{<4} or E outside {6, 7, 8}.
SigmaAction sigma_action(DiagramType type, std::size_t n);

// One connected component of the blown-down curves: the (-2)-classes in
// diagram order plus the induced action.
struct NodalComponent {
  std::vector<RatVector> curves;
  SigmaAction sigma;
};

// Splits (-2)-classes into connected components of their intersection graph.
// Each component must be a chain (type A); it is returned in chain order
// with the A_n action. Throws InvalidArgument otherwise.
std::vector<NodalComponent> chain_components(const LatticeModel& model,
                                             std::vector<RatVector> curves);

// ---------------------------------------------------------------------------

enum class ModelKind { kFBasis, kPetersen };

const char* to_string(ModelKind kind);
const LatticeModel& lattice_model(ModelKind kind);

struct GeneralDoublePlane {
  std::size_t i = 0;
  std::size_t j = 0;
};

struct NodalDoublePlane {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<NodalComponent> components;
};

struct HessianProjection {
  Pair pair;
  bool eckardt = false;
};

// g_{ab,cd} expressed through projection involutions.
struct DerivedInvolution {
  Pair first;
  Pair second;
};

using InvolutionFamily = std::variant<GeneralDoublePlane, NodalDoublePlane,
                                      HessianProjection, DerivedInvolution>;

struct InvolutionSpec {
  InvolutionFamily family;
  ModelKind model = ModelKind::kFBasis;
  IntMatrix matrix{kLatticeRank};

  std::string label() const;
};

// The action of the double-plane involution attached to the isotropic pair
// (fi, fj) on an arbitrary model:
//
//   g(x) = -x + 2 (x, fi) fj + 2 (x, fj) fi + sigma(r) + r,
//
// where r is the orthogonal projection of x onto the span of the blown-down
// curves, computed by an exact solve against their Gram matrix. Validates
// the preconditions (curves orthogonal to fi, fj and spanning a negative
// definite lattice) and that the result is an integral isometric involution;
// throws InvariantViolation / InvalidArgument.
IntMatrix double_plane_action(const LatticeModel& model, const RatVector& fi,
                              const RatVector& fj,
                              std::span<const NodalComponent> components);

// g_ij on the f-basis: f_i, f_j fixed, f_a -> 2 f_i + 2 f_j - f_a.
InvolutionSpec general_double_plane(std::size_t i, std::size_t j);

// g_ij with blown-down curves, via double_plane_action on the f-basis.
InvolutionSpec nodal_double_plane(std::size_t i, std::size_t j,
                                  std::vector<NodalComponent> components);

// Convenience: nodal g_ij whose only blown-down curves are the given nodal
// classes, each an A_1 component.
InvolutionSpec nodal_double_plane(std::size_t i, std::size_t j,
                                  std::span<const NodalClass> classes);

// Permutation t_ab of the U-basis induced by the transposition (a b).
IntMatrix transposition_matrix(Pair ab);

// Reflection x -> x + (x, alpha) alpha for a (-2)-vector alpha. Throws
// InvariantViolation if the result is not integral.
IntMatrix reflection_matrix(const LatticeModel& model, const RatVector& alpha);

// h_ab on the Petersen basis: r_{alpha_ab} * t_ab, or t_ab alone when P_ab is
// an Eckardt point.
InvolutionSpec hessian_projection(Pair ab, bool eckardt);

// g_{ab,cd} = h_ab * h_cd for disjoint pairs, h_de for pairs sharing an index
// ({d,e} the complement of the union). Non-Eckardt generators.
InvolutionSpec derived_g(Pair ab, Pair cd);

// ---------------------------------------------------------------------------
// Generator families consumed by the word-level search.

struct GeneratorSet {
  std::string family;  // e.g. "exp1", "exp2:3", "hessian:table2"
  ModelKind model = ModelKind::kFBasis;
  std::vector<InvolutionSpec> generators;

  std::size_t size() const { return generators.size(); }
  const IntMatrix& gram() const { return lattice_model(model).gram; }
  // Stable hex digest of the family name and every generator matrix.
  std::string digest() const;
};

// g_12, g_23, ..., g_{9,10}, g_{1,10}. The first m generators g_{i,i+1}
// carry the nodal class r_{i,i+1} as an A_1 component (m = 0: all general).
// Throws InvalidArgument for m > 4.
GeneratorSet experiment_generators(std::size_t m);

// The six Eckardt pairs {a,b} within {1,2,3,4}.
std::set<Pair> table2_eckardt_pairs();

// h_ab for the ten pairs in kPairs order; pairs in `eckardt` act as bare
// transpositions.
GeneratorSet hessian_generators(const std::set<Pair>& eckardt);

}  // namespace salemlab

#endif  // SALEMLAB_INVOLUTION_HPP_
