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

#include "salemlab/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>
#include <utility>

#include "salemlab/error.hpp"
#include "salemlab/lattice.hpp"
#include "salemlab/linalg.hpp"

namespace salemlab {

std::string Word::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out + ")";
}

Word Word::parse(const std::string& text) {
  Word w;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    if (digits.size() > 6) throw InvalidArgument("word letter out of range: " + digits);
    w.letters.push_back(std::stoul(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw InvalidArgument("unexpected character in word: '" + std::string(1, c) + "'");
    }
  }
  flush();
  return w;
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
  return a.letters < b.letters;
}

IntMatrix compose(const GeneratorSet& generators, const Word& word) {
  const std::size_t n = generators.gram().dim();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t letter : word.letters) {
    if (letter < 1 || letter > generators.size()) {
      throw InvalidArgument("word letter " + std::to_string(letter) +
                            " outside 1.." + std::to_string(generators.size()));
    }
    m = m * generators.generators[letter - 1].matrix;
  }
  return m;
}

SalemReport analyze(const Word& word, const GeneratorSet& generators) {
  SalemReport report;
  report.word = word;
  report.char_poly = char_poly(compose(generators, word));
  report.factorization = strip_cyclotomic(report.char_poly);
  if (report.is_salem()) {
    report.salem_degree = *report.factorization.residual.degree();
    report.lambda = spectral_radius(report.factorization.residual);
  }
  return report;
}

Word canonical_form(const Word& word) {
  std::vector<std::size_t> w;
  for (std::size_t letter : word.letters) {
    if (!w.empty() && w.back() == letter) {
      w.pop_back();
    } else {
      w.push_back(letter);
    }
  }
  // a u a is conjugate to u.
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1]) {
    ++lo;
    --hi;
  }
  w = std::vector<std::size_t>(w.begin() + lo, w.begin() + hi);

  std::vector<std::size_t> best = w;
  std::vector<std::size_t> candidate = w;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < candidate.size(); ++r) {
      std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
      best = std::min(best, candidate);
    }
    std::reverse(candidate.begin(), candidate.end());
  }
  return Word{std::move(best)};
}

namespace {

unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Factorization and lambda depend only on the characteristic polynomial,
// which many classes share.
class FactorMemo {
 public:
  SalemReport analyze(const Word& word, const GeneratorSet& generators) {
    SalemReport report;
    report.word = word;
    report.char_poly = char_poly(compose(generators, word));
    {
      std::lock_guard lock(mu_);
      auto it = memo_.find(report.char_poly);
      if (it != memo_.end()) return fill(std::move(report), it->second);
    }
    Entry e;
    e.factorization = strip_cyclotomic(report.char_poly);
    if (e.factorization.classification == Classification::kSalem) {
      e.lambda = spectral_radius(e.factorization.residual);
    }
    {
      std::lock_guard lock(mu_);
      memo_.emplace(report.char_poly, e);
    }
    return fill(std::move(report), e);
  }

 private:
  struct Entry {
    FactorizationReport factorization;
    std::optional<SpectralRadius> lambda;
  };
  static SalemReport fill(SalemReport report, const Entry& e) {
    report.factorization = e.factorization;
    report.lambda = e.lambda;
    if (report.is_salem()) report.salem_degree = *report.factorization.residual.degree();
    return report;
  }
  std::mutex mu_;
  std::map<IntPolynomial, Entry> memo_;
};

bool better(const SalemReport& a, const SalemReport& b) {
  if (a.lambda->lower != b.lambda->lower) return a.lambda->lower < b.lambda->lower;
  return a.word < b.word;
}

// Analyzes the sorted class representatives in parallel and merges the
// results in class order, so the summary does not depend on thread count.
void analyze_classes(const GeneratorSet& generators, const std::set<Word>& classes,
                     const SearchOptions& options, SearchSummary& summary) {
  const std::vector<Word> work(classes.begin(), classes.end());
  std::vector<std::optional<SalemReport>> results(work.size());
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (options.store) results[i] = options.store->find(work[i]);
    if (!results[i]) missing.push_back(i);
  }
  FactorMemo memo;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < missing.size(); i = next++) {
      results[missing[i]] = memo.analyze(work[missing[i]], generators);
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned t = resolve_threads(options.threads, missing.size());
    for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
    worker();
  }
  if (options.store) {
    for (std::size_t i : missing) options.store->insert(*results[i]);
  }
  summary.dedup_classes = work.size();
  for (auto& slot : results) {
    SalemReport& report = *slot;
    if (report.is_anomalous()) summary.anomalies.push_back(report);
    if (report.is_salem() && report.salem_degree <= kMaxTrackedDegree) {
      auto it = summary.minima.find(report.salem_degree);
      if (it == summary.minima.end()) {
        summary.minima.emplace(report.salem_degree, report);
      } else if (better(report, it->second)) {
        it->second = report;
      }
    }
    if (options.keep_reports) summary.reports.push_back(std::move(report));
  }
}

void validate(const GeneratorSet& generators, const SearchOptions& options) {
  if (options.max_length < 1) throw InvalidArgument("max_length must be >= 1");
  if (generators.size() == 0) throw InvalidArgument("empty generator set");
  if (options.distinct_letters && options.max_length > generators.size()) {
    throw InvalidArgument("max_length exceeds the number of distinct letters");
  }
}

}  // namespace

SearchSummary exhaustive_search(const GeneratorSet& generators,
                                const SearchOptions& options) {
  validate(generators, options);
  SearchSummary summary;
  std::set<Word> classes;
  const std::size_t n = generators.size();
  std::vector<bool> used(n + 1, false);
  Word current;

  // Depth-first over words, skipping adjacent repeats (they reduce to
  // shorter words that are enumerated anyway).
  auto visit = [&](auto&& self) -> bool {
    if (!current.empty()) {
      if (summary.words_examined >= options.word_budget) {
        summary.budget_exhausted = true;
        return false;
      }
      ++summary.words_examined;
      Word c = canonical_form(current);
      if (!c.empty()) classes.insert(std::move(c));
    }
    if (current.size() == options.max_length) return true;
    for (std::size_t letter = 1; letter <= n; ++letter) {
      if (options.distinct_letters ? used[letter]
                                   : (!current.empty() && current.letters.back() == letter)) {
        continue;
      }
      used[letter] = true;
      current.letters.push_back(letter);
      const bool go_on = self(self);
      current.letters.pop_back();
      used[letter] = false;
      if (!go_on) return false;
    }
    return true;
  };
  visit(visit);
  analyze_classes(generators, classes, options, summary);
  return summary;
}

SearchSummary random_search(const GeneratorSet& generators,
                            std::uint64_t trials, std::uint64_t seed,
                            const SearchOptions& options) {
  validate(generators, options);
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  SearchSummary summary;
  summary.seed = seed;
  std::mt19937_64 engine(seed);
  std::set<Word> classes;
  const std::size_t n = generators.size();
  std::vector<std::size_t> pool(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (summary.words_examined >= options.word_budget) {
      summary.budget_exhausted = true;
      break;
    }
    ++summary.words_examined;
    const std::size_t len = 1 + uniform_below(engine, options.max_length);
    Word w;
    if (options.distinct_letters) {
      for (std::size_t i = 0; i < n; ++i) pool[i] = i + 1;
      for (std::size_t i = 0; i < len; ++i) {
        std::swap(pool[i], pool[i + uniform_below(engine, n - i)]);
        w.letters.push_back(pool[i]);
      }
    } else {
      for (std::size_t i = 0; i < len; ++i) w.letters.push_back(1 + uniform_below(engine, n));
    }
    Word c = canonical_form(w);
    if (!c.empty()) classes.insert(std::move(c));
  }
  analyze_classes(generators, classes, options, summary);
  return summary;
}

GrowthResult growth_count(const GeneratorSet& generators, const RatVector& h,
                          const Rational& r, std::size_t max_length,
                          std::uint64_t element_budget) {
  const LatticeModel& model = lattice_model(generators.model);
  if (h.dim() != model.gram.dim()) throw DimensionMismatch("growth_count: h");
  if (inner(model, h, h) <= 0) throw InvalidArgument("growth_count: (h, h) must be positive");
  if (element_budget < 1) throw InvalidArgument("growth_count: empty budget");

  GrowthResult result;
  auto consider = [&](const IntMatrix& g) {
    ++result.elements;
    if (inner(model, g.apply(h), h) <= r) ++result.count;
  };
  std::unordered_set<IntMatrix, IntMatrixHash> seen;
  std::vector<IntMatrix> frontier{IntMatrix::identity(model.gram.dim())};
  seen.insert(frontier.front());
  consider(frontier.front());
  for (std::size_t radius = 1; radius <= max_length; ++radius) {
    std::vector<IntMatrix> next;
    for (const IntMatrix& g : frontier) {
      for (const auto& s : generators.generators) {
        IntMatrix gs = g * s.matrix;
        if (seen.count(gs)) continue;
        if (seen.size() >= element_budget) return result;
        seen.insert(gs);
        consider(gs);
        next.push_back(std::move(gs));
      }
    }
    frontier = std::move(next);
    result.radius_reached = radius;
  }
  result.complete = true;
  return result;
}

std::vector<SalemReport> experiment_rows(std::size_t m) {
  const GeneratorSet gens = experiment_generators(m);
  std::vector<SalemReport> rows;
  Word w{{1}};
  for (std::size_t k = 2; k <= kLatticeRank; ++k) {
    w.letters.push_back(k);
    rows.push_back(analyze(w, gens));
  }
  return rows;
}

}  // namespace salemlab
