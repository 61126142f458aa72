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

#ifndef SALEMLAB_DYNAMICS_HPP_
#define SALEMLAB_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "salemlab/int_matrix.hpp"
#include "salemlab/involution.hpp"
#include "salemlab/number.hpp"
#include "salemlab/polynomial.hpp"
#include "salemlab/rat_vector.hpp"
#include "salemlab/salem.hpp"

namespace salemlab {

// A product of generators, letters are 1-based indices into a GeneratorSet.
// The word (w1, ..., wk) stands for M_{w1} * ... * M_{wk}.
struct Word {
  std::vector<std::size_t> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  // "(1,2,3)"; the empty word prints as "()".
  std::string to_string() const;
  // Accepts "1,2,3", "(1,2,3)" or whitespace separated letters.
  static Word parse(const std::string& text);

  friend bool operator==(const Word&, const Word&) = default;
  // Shorter words first, then lexicographic.
  friend bool operator<(const Word& a, const Word& b);
};

struct SalemReport {
  Word word;
  IntPolynomial char_poly;
  FactorizationReport factorization;
  std::size_t salem_degree = 0;
  std::optional<SpectralRadius> lambda;  // present iff Salem

  Classification classification() const { return factorization.classification; }
  bool is_salem() const { return classification() == Classification::kSalem; }
  bool is_anomalous() const {
    return classification() == Classification::kAnomalous;
  }
};

IntMatrix compose(const GeneratorSet& generators, const Word& word);
SalemReport analyze(const Word& word, const GeneratorSet& generators);

// Free reduction, then cyclic reduction, then the least word among all
// rotations of the word and of its reversal.
Word canonical_form(const Word& word);

// Lookup table for already analyzed class representatives. Searches consult
// it before the parallel phase and insert new reports after the merge, so
// implementations need no locking.
class ReportStore {
 public:
  virtual ~ReportStore() = default;
  virtual std::optional<SalemReport> find(const Word& canonical) = 0;
  virtual void insert(const SalemReport& report) = 0;
};

struct SearchOptions {
  std::size_t max_length = 1;
  bool distinct_letters = false;
  std::uint64_t word_budget = 10'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
  bool keep_reports = false;
  ReportStore* store = nullptr;
};

struct SearchSummary {
  std::map<std::size_t, SalemReport> minima;  // degree -> smallest lambda
  std::uint64_t words_examined = 0;
  std::uint64_t dedup_classes = 0;
  std::uint64_t seed = 0;
  bool budget_exhausted = false;
  std::vector<SalemReport> anomalies;
  std::vector<SalemReport> reports;  // every analyzed class, if requested
};

inline constexpr std::size_t kMaxTrackedDegree = 10;

SearchSummary exhaustive_search(const GeneratorSet& generators,
                                const SearchOptions& options);

SearchSummary random_search(const GeneratorSet& generators,
                            std::uint64_t trials, std::uint64_t seed,
                            const SearchOptions& options);

// Uniform integer in [0, bound) from a 64-bit engine by rejection sampling.
// Independent of the standard library's distribution implementations.
template <typename Engine>
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t v = engine();
    if (v < limit) return v % bound;
  }
}

struct GrowthResult {
  std::uint64_t count = 0;     // elements g with (g h, h) <= r
  std::uint64_t elements = 0;  // distinct elements enumerated
  std::size_t radius_reached = 0;
  bool complete = false;  // the whole ball of radius max_length was visited
};

inline constexpr std::uint64_t kDefaultGrowthBudget = 200'000;

GrowthResult growth_count(const GeneratorSet& generators, const RatVector& h,
                          const Rational& r, std::size_t max_length,
                          std::uint64_t element_budget = kDefaultGrowthBudget);

// Reports for c_k = g_1 * ... * g_k, k = 2..10.
std::vector<SalemReport> experiment_rows(std::size_t m);

}  // namespace salemlab

#endif  // SALEMLAB_DYNAMICS_HPP_
