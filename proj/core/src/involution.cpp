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

#include "salemlab/involution.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <utility>

#include "salemlab/error.hpp"
#include "salemlab/linalg.hpp"

namespace salemlab {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

IntMatrix to_int_matrix(const std::vector<RatVector>& columns,
                        const std::string& what) {
  const std::size_t n = columns.size();
  IntMatrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      const Rational& q = columns[c][r];
      require(is_integral(q), what + ": non-integral matrix entry");
      m(r, c) = q.get_num();
    }
  }
  return m;
}

void require_isometric_involution(const IntMatrix& m, const IntMatrix& gram,
                                  const std::string& what) {
  require((m * m).is_identity(), what + ": not an involution");
  require(preserves_form(m, gram), what + ": does not preserve the form");
}

}  // namespace

SigmaAction sigma_action(DiagramType type, std::size_t n) {
  SigmaAction s{type, n, {}};
  switch (type) {
    case DiagramType::kA:
      if (n < 1) throw InvalidArgument("A_n needs n >= 1");
      for (std::size_t i = 0; i < n; ++i) s.permutation.push_back(n - 1 - i);
      break;
    case DiagramType::kD:
      if (n < 4) throw InvalidArgument("D_n needs n >= 4");
      for (std::size_t i = 0; i < n; ++i) s.permutation.push_back(i);
      if (n % 2 == 1) std::swap(s.permutation[0], s.permutation[1]);
      break;
    case DiagramType::kE:
      if (n < 6 || n > 8) throw InvalidArgument("E_n needs n in {6, 7, 8}");
      for (std::size_t i = 0; i < n; ++i) s.permutation.push_back(i);
      if (n == 6) {
        // e_i -> e_{8-i} for i = 2..6 (1-based); e_1 fixed.
        for (std::size_t i = 2; i <= 6; ++i) s.permutation[i - 1] = 8 - i - 1;
      }
      break;
  }
  return s;
}

std::vector<NodalComponent> chain_components(const LatticeModel& model,
                                             std::vector<RatVector> curves) {
  const std::size_t n = curves.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (inner(model, curves[i], curves[i]) != -2) {
      throw InvalidArgument("chain_components: curve is not a (-2)-class");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational d = inner(model, curves[i], curves[j]);
      if (d == 0) continue;
      if (d != 1) throw InvalidArgument("chain_components: curves meet with multiplicity != 1");
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<NodalComponent> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t edges2 = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      edges2 += adj[v].size();
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    const bool is_path = edges2 == 2 * (members.size() - 1) &&
                         std::all_of(members.begin(), members.end(),
                                     [&](std::size_t v) { return adj[v].size() <= 2; });
    if (!is_path) throw InvalidArgument("chain_components: component is not of type A");
    std::size_t end = members.front();
    for (std::size_t v : members) {
      if (adj[v].size() <= 1) {
        end = v;
        break;
      }
    }
    NodalComponent comp;
    std::size_t prev = n;
    for (std::size_t v = end;;) {
      comp.curves.push_back(curves[v]);
      std::size_t next = n;
      for (std::size_t w : adj[v]) {
        if (w != prev) next = w;
      }
      if (next == n) break;
      prev = v;
      v = next;
    }
    comp.sigma = sigma_action(DiagramType::kA, comp.curves.size());
    out.push_back(std::move(comp));
  }
  return out;
}

const char* to_string(ModelKind kind) {
  return kind == ModelKind::kFBasis ? "f-basis" : "petersen";
}

const LatticeModel& lattice_model(ModelKind kind) {
  if (kind == ModelKind::kFBasis) return f_model();
  return petersen_model();
}

std::string InvolutionSpec::label() const {
  struct Visitor {
    std::string operator()(const GeneralDoublePlane& g) const {
      return "g" + std::to_string(g.i) + "," + std::to_string(g.j);
    }
    std::string operator()(const NodalDoublePlane& g) const {
      std::size_t curves = 0;
      for (const auto& c : g.components) curves += c.curves.size();
      return "g" + std::to_string(g.i) + "," + std::to_string(g.j) + "[" +
             std::to_string(curves) + " nodal]";
    }
    std::string operator()(const HessianProjection& h) const {
      return "h" + to_string(h.pair) + (h.eckardt ? "[E]" : "");
    }
    std::string operator()(const DerivedInvolution& d) const {
      return "g" + to_string(d.first) + "," + to_string(d.second);
    }
  };
  return std::visit(Visitor{}, family);
}

IntMatrix double_plane_action(const LatticeModel& model, const RatVector& fi,
                              const RatVector& fj,
                              std::span<const NodalComponent> components) {
  const std::size_t n = model.gram.dim();
  if (fi.dim() != n || fj.dim() != n) throw DimensionMismatch("double_plane_action");
  if (inner(model, fi, fi) != 0 || inner(model, fj, fj) != 0 ||
      inner(model, fi, fj) != 1) {
    throw InvalidArgument("double_plane_action: (fi, fj) is not an isotropic pair with (fi, fj) = 1");
  }

  std::vector<RatVector> all;
  for (const auto& comp : components) {
    if (comp.sigma.permutation.size() != comp.curves.size()) {
      throw InvalidArgument("double_plane_action: sigma does not match the component size");
    }
    for (const auto& r : comp.curves) {
      if (inner(model, r, fi) != 0 || inner(model, r, fj) != 0) {
        throw InvalidArgument("double_plane_action: blown-down curve not orthogonal to fi, fj");
      }
      all.push_back(r);
    }
    // sigma must preserve the intersection pattern of the component.
    for (std::size_t a = 0; a < comp.curves.size(); ++a) {
      for (std::size_t b = 0; b < comp.curves.size(); ++b) {
        if (inner(model, comp.curves[a], comp.curves[b]) !=
            inner(model, comp.curves[comp.sigma.permutation[a]],
                  comp.curves[comp.sigma.permutation[b]])) {
          throw InvalidArgument("double_plane_action: sigma is not an isometry of the component");
        }
      }
    }
  }
  if (!all.empty()) {
    IntMatrix rgram(all.size());
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        const Rational d = inner(model, all[a], all[b]);
        if (!is_integral(d)) throw InvalidArgument("double_plane_action: non-integral curve pairing");
        rgram(a, b) = d.get_num();
      }
    }
    const Signature sig = signature_check(rgram);
    if (sig.negative != all.size()) {
      throw InvalidArgument("double_plane_action: curves do not span a negative definite lattice");
    }
  }

  std::vector<RatVector> columns;
  columns.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    const RatVector x = RatVector::unit(n, c);
    RatVector image = -x;
    image += Rational(2 * inner(model, x, fi)) * fj;
    image += Rational(2 * inner(model, x, fj)) * fi;
    for (const auto& comp : components) {
      const std::size_t k = comp.curves.size();
      RatMatrix g(k, std::vector<Rational>(k));
      RatVector rhs(k);
      for (std::size_t a = 0; a < k; ++a) {
        rhs[a] = inner(model, x, comp.curves[a]);
        for (std::size_t b = 0; b < k; ++b) g[a][b] = inner(model, comp.curves[a], comp.curves[b]);
      }
      const RatVector coeff = solve_rational(g, rhs);
      for (std::size_t a = 0; a < k; ++a) {
        image += coeff[a] * comp.curves[a];
        image += coeff[a] * comp.curves[comp.sigma.permutation[a]];
      }
    }
    columns.push_back(std::move(image));
  }
  IntMatrix m = to_int_matrix(columns, "double_plane_action");
  require_isometric_involution(m, model.gram, "double_plane_action");
  return m;
}

InvolutionSpec general_double_plane(std::size_t i, std::size_t j) {
  if (i < 1 || j > kLatticeRank || i >= j) {
    throw InvalidArgument("general_double_plane: need 1 <= i < j <= 10");
  }
  IntMatrix m(kLatticeRank);
  for (std::size_t a = 1; a <= kLatticeRank; ++a) {
    if (a == i || a == j) {
      m(a - 1, a - 1) = 1;
    } else {
      m(i - 1, a - 1) = 2;
      m(j - 1, a - 1) = 2;
      m(a - 1, a - 1) = -1;
    }
  }
  require_isometric_involution(m, f_model().gram, "general_double_plane");
  return {GeneralDoublePlane{i, j}, ModelKind::kFBasis, std::move(m)};
}

InvolutionSpec nodal_double_plane(std::size_t i, std::size_t j,
                                  std::vector<NodalComponent> components) {
  if (i < 1 || j > kLatticeRank || i >= j) {
    throw InvalidArgument("nodal_double_plane: need 1 <= i < j <= 10");
  }
  const FBasisModel& model = f_model();
  IntMatrix m = double_plane_action(model, model.f(i), model.f(j), components);
  return {NodalDoublePlane{i, j, std::move(components)}, ModelKind::kFBasis,
          std::move(m)};
}

InvolutionSpec nodal_double_plane(std::size_t i, std::size_t j,
                                  std::span<const NodalClass> classes) {
  std::vector<NodalComponent> components;
  for (const auto& r : classes) {
    components.push_back({{r.coords}, sigma_action(DiagramType::kA, 1)});
  }
  return nodal_double_plane(i, j, std::move(components));
}

IntMatrix transposition_matrix(Pair ab) {
  pair_index(ab);  // validates
  auto swap_letter = [&](int x) { return x == ab.a ? ab.b : (x == ab.b ? ab.a : x); };
  IntMatrix t(kLatticeRank);
  for (std::size_t c = 0; c < kLatticeRank; ++c) {
    const Pair image = make_pair(swap_letter(kPairs[c].a), swap_letter(kPairs[c].b));
    t(pair_index(image), c) = 1;
  }
  return t;
}

IntMatrix reflection_matrix(const LatticeModel& model, const RatVector& alpha) {
  if (inner(model, alpha, alpha) != -2) {
    throw InvalidArgument("reflection_matrix: root must have norm -2");
  }
  const std::size_t n = model.gram.dim();
  std::vector<RatVector> columns;
  for (std::size_t c = 0; c < n; ++c) {
    const RatVector x = RatVector::unit(n, c);
    columns.push_back(x + inner(model, x, alpha) * alpha);
  }
  return to_int_matrix(columns, "reflection_matrix");
}

InvolutionSpec hessian_projection(Pair ab, bool eckardt) {
  const PetersenModel& model = petersen_model();
  IntMatrix m = transposition_matrix(ab);
  if (!eckardt) m = reflection_matrix(model, model.alpha(ab)) * m;
  require_isometric_involution(m, model.gram, "hessian_projection " + to_string(ab));
  return {HessianProjection{ab, eckardt}, ModelKind::kPetersen, std::move(m)};
}

InvolutionSpec derived_g(Pair ab, Pair cd) {
  pair_index(ab);
  pair_index(cd);
  if (ab == cd) throw InvalidArgument("derived_g: pairs must differ");
  IntMatrix m(kLatticeRank);
  if (disjoint(ab, cd)) {
    m = hessian_projection(ab, false).matrix * hessian_projection(cd, false).matrix;
  } else {
    std::vector<int> rest;
    for (int x = 1; x <= 5; ++x) {
      if (x != ab.a && x != ab.b && x != cd.a && x != cd.b) rest.push_back(x);
    }
    m = hessian_projection(make_pair(rest[0], rest[1]), false).matrix;
  }
  require_isometric_involution(m, petersen_model().gram, "derived_g");
  return {DerivedInvolution{ab, cd}, ModelKind::kPetersen, std::move(m)};
}

std::string GeneratorSet::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(family);
  mix(to_string(model));
  for (const auto& g : generators) mix(g.matrix.to_string());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GeneratorSet experiment_generators(std::size_t m) {
  if (m > 4) throw InvalidArgument("experiment_generators: m must be in 0..4");
  GeneratorSet set;
  set.family = m == 0 ? "exp1" : "exp2:" + std::to_string(m);
  set.model = ModelKind::kFBasis;
  for (std::size_t i = 1; i <= kLatticeRank; ++i) {
    const std::size_t a = i < kLatticeRank ? i : 1;
    const std::size_t b = i < kLatticeRank ? i + 1 : kLatticeRank;
    if (i <= m) {
      const NodalClass r = nodal_class(i);
      set.generators.push_back(nodal_double_plane(a, b, std::span<const NodalClass>(&r, 1)));
    } else {
      set.generators.push_back(general_double_plane(a, b));
    }
  }
  return set;
}

std::set<Pair> table2_eckardt_pairs() {
  std::set<Pair> out;
  for (Pair p : kPairs) {
    if (p.b <= 4) out.insert(p);
  }
  return out;
}

GeneratorSet hessian_generators(const std::set<Pair>& eckardt) {
  GeneratorSet set;
  set.model = ModelKind::kPetersen;
  if (eckardt.empty()) {
    set.family = "hessian";
  } else if (eckardt == table2_eckardt_pairs()) {
    set.family = "hessian:table2";
  } else {
    set.family = "hessian:";
    bool first = true;
    for (Pair p : eckardt) {
      set.family += (first ? "" : ",") + to_string(p);
      first = false;
    }
  }
  for (Pair p : kPairs) {
    set.generators.push_back(hessian_projection(p, eckardt.count(p) > 0));
  }
  return set;
}

}  // namespace salemlab
