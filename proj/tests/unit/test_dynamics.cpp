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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "salemlab/dynamics.hpp"
#include "salemlab/error.hpp"
#include "salemlab/linalg.hpp"

using namespace salemlab;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t len, std::size_t n = 10) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back(1 + rng() % n);
  return w;
}

double lambda_of(const SalemReport& r) { return r.lambda ? r.lambda->approx() : 1.0; }

// Every word up to max_length, no reduction, then deduplication by an
// ordered set of matrices.
std::pair<std::uint64_t, std::uint64_t> brute_growth(const GeneratorSet& g, const RatVector& h,
                                                     const Rational& r, std::size_t max_length) {
  std::set<IntMatrix> elements;
  std::vector<IntMatrix> layer{IntMatrix::identity(10)};
  elements.insert(layer.front());
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<IntMatrix> next;
    for (const auto& m : layer) {
      for (const auto& s : g.generators) next.push_back(m * s.matrix);
    }
    for (const auto& m : next) elements.insert(m);
    layer = std::move(next);
  }
  const LatticeModel& model = lattice_model(g.model);
  std::uint64_t count = 0;
  for (const auto& m : elements) count += inner(model, m.apply(h), h) <= r;
  return {count, elements.size()};
}

}  // namespace

TEST_CASE("Word text forms") {
  CHECK(Word::parse("1,2,3").letters == std::vector<std::size_t>{1, 2, 3});
  CHECK(Word::parse("(2, 6, 1, 3)").letters == std::vector<std::size_t>{2, 6, 1, 3});
  CHECK(Word::parse("").empty());
  CHECK(Word{{1, 5, 10}}.to_string() == "(1,5,10)");
  CHECK(Word{}.to_string() == "()");
  CHECK_THROWS_AS(Word::parse("1;2"), InvalidArgument);
  CHECK_THROWS_AS(Word::parse("-1"), InvalidArgument);
  CHECK(Word{{2}} < Word{{1, 1}});
}

TEST_CASE("analyze examples") {
  const GeneratorSet hess = hessian_generators({});
  const SalemReport empty = analyze(Word{}, hess);
  CHECK(empty.char_poly == pow(IntPolynomial{-1, 1}, 10));
  CHECK(empty.classification() == Classification::kUnit);
  CHECK_FALSE(empty.lambda.has_value());
  CHECK(empty.salem_degree == 0);

  const SalemReport t1 = analyze(Word{{1, 2, 3, 4, 5, 6, 7}}, hess);
  CHECK(t1.factorization.residual == IntPolynomial{1, -5, 1});
  CHECK(t1.lambda->truncated(4) == "4.7912");

  const SalemReport t2 = analyze(Word{{7, 8, 10, 1, 4}}, hessian_generators(table2_eckardt_pairs()));
  CHECK(t2.factorization.residual == IntPolynomial{1, -4, 1});
  CHECK(t2.lambda->truncated(4) == "3.7320");
  CHECK(t2.salem_degree == 2);

  CHECK_THROWS_AS(analyze(Word{{0}}, hess), InvalidArgument);
  CHECK_THROWS_AS(analyze(Word{{11}}, hess), InvalidArgument);
}

TEST_CASE("canonical_form examples") {
  CHECK(canonical_form(Word{{3, 1, 2}}) == Word{{1, 2, 3}});
  CHECK(canonical_form(Word{{1, 2, 2, 3}}) == Word{{1, 3}});
  CHECK(canonical_form(Word{{1, 2, 1}}) == Word{{2}});
  CHECK(canonical_form(Word{{4, 4}}).empty());
  CHECK(canonical_form(Word{{3, 2, 1}}) == Word{{1, 2, 3}});
  const Word a{{2, 6, 1, 3}}, b{{6, 1, 3, 2}};
  CHECK(canonical_form(a) == canonical_form(b));
  const GeneratorSet hess = hessian_generators({});
  const auto ra = analyze(a, hess), rb = analyze(b, hess);
  CHECK(ra.factorization.residual == rb.factorization.residual);
  // Computed factor; the printed quartic x^4-4x^3-2x^2-4x+1 has a root near
  // 4.611 and cannot belong to lambda = 4.3306.
  CHECK(ra.factorization.residual == IntPolynomial::parse("x^4-5x^3+4x^2-5x+1"));
  CHECK(ra.lambda->truncated(5) == "4.33064");
}

TEST_CASE("canonical_form is idempotent and invariant under rotation and reversal") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    Word w = random_word(rng, 1 + rng() % 9, 4);
    const Word c = canonical_form(w);
    CHECK(canonical_form(c) == c);
    std::rotate(w.letters.begin(), w.letters.begin() + rng() % w.size(), w.letters.end());
    CHECK(canonical_form(w) == c);
    std::reverse(w.letters.begin(), w.letters.end());
    CHECK(canonical_form(w) == c);
  }
}

TEST_CASE("lambda is invariant under reversal and rotation") {
  std::mt19937_64 rng(43);
  for (const auto& gens : {hessian_generators({}), experiment_generators(2)}) {
    for (int t = 0; t < 25; ++t) {
      Word w = random_word(rng, 2 + rng() % 8);
      const SalemReport base = analyze(w, gens);
      Word rev = w;
      std::reverse(rev.letters.begin(), rev.letters.end());
      Word rot = w;
      std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
      for (const Word& other : {rev, rot, canonical_form(w)}) {
        const SalemReport r = analyze(other, gens);
        CHECK(r.factorization.residual == base.factorization.residual);
        if (base.lambda) {
          CHECK(r.lambda->lower == base.lambda->lower);
          CHECK(r.lambda->upper == base.lambda->upper);
        }
      }
    }
  }
}

TEST_CASE("Salem factors divide the characteristic polynomial") {
  std::mt19937_64 rng(47);
  const GeneratorSet gens = hessian_generators(table2_eckardt_pairs());
  for (int t = 0; t < 60; ++t) {
    const SalemReport r = analyze(random_word(rng, 1 + rng() % 10), gens);
    CHECK_FALSE(r.is_anomalous());
    CHECK(poly_exact_div(r.char_poly, r.factorization.residual).has_value());
    CHECK(r.factorization.reconstruct() == r.char_poly);
    if (r.lambda) CHECK(r.lambda->lower >= make_rational(117628, 100000));
  }
}

TEST_CASE("experiment rows reproduce the first experiment") {
  const std::vector<std::string> printed = {
      "x^4-16x^3+14x^2-16x+1",
      "x^2-14x+1",
      "x^6-54x^5+63x^4-84x^3+63x^2-54x+1",
      "x^6-70x^5-113x^4-148x^3-113x^2-70x+1",
      "x^6-186x^5-129x^4-332x^3-129x^2-186x+1",
      "x^8-320x^7-548x^6-704x^5-698x^4-704x^3-548x^2-320x+1",
      // printed without the x^5 term
      "x^10-706x^9+845x^8-1048x^7+1202x^6-1612x^5+1202x^4-1048x^3+845x^2-706x+1",
      "x^8-992x^7-1700x^6-1568x^5-1466x^4-1568x^3-1700x^2-992x+1"};
  const auto rows = experiment_rows(0);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].classification() == Classification::kUnit);
  for (std::size_t k = 3; k <= 10; ++k) {
    CHECK(rows[k - 2].factorization.residual == IntPolynomial::parse(printed[k - 3]));
  }
}

TEST_CASE("experiment lambdas match independently computed values") {
  // Rounded to 4 places by a floating-point CAS run over the same matrices.
  const double expected[5][8] = {
      {15.1451, 13.9282, 52.8373, 71.6072, 186.7005, 321.7102, 704.8032, 993.7123},
      {11.5704, 9.8990, 41.2743, 51.3024, 143.0266, 237.3386, 451.0022, 575.9257},
      {7.8730, 8.7852, 34.1909, 42.5316, 119.9427, 218.5234, 429.2906, 354.6535},
      {5.1792, 8.3524, 26.0787, 34.7378, 95.4935, 174.3227, 388.5230, 291.8455},
      {5.1792, 6.0180, 20.8589, 33.2946, 92.0050, 163.6395, 371.1676, 277.3699}};
  for (std::size_t m = 0; m <= 4; ++m) {
    const auto rows = experiment_rows(m);
    CHECK(rows[0].classification() == Classification::kUnit);
    for (std::size_t k = 3; k <= 10; ++k) {
      CHECK(std::abs(lambda_of(rows[k - 2]) - expected[m][k - 3]) <= 6e-5);
    }
  }
}

TEST_CASE("exhaustive search with max_length 1 sees only units") {
  SearchOptions o;
  o.max_length = 1;
  const SearchSummary s = exhaustive_search(hessian_generators({}), o);
  CHECK(s.words_examined == 10);
  CHECK(s.dedup_classes == 10);
  CHECK(s.minima.empty());
  CHECK(s.anomalies.empty());
}

TEST_CASE("exhaustive search minima are monotone in max_length") {
  const GeneratorSet gens = hessian_generators({});
  std::map<std::size_t, Rational> previous;
  for (std::size_t len = 1; len <= 4; ++len) {
    SearchOptions o;
    o.max_length = len;
    const SearchSummary s = exhaustive_search(gens, o);
    for (const auto& [d, r] : previous) {
      REQUIRE(s.minima.count(d));
      CHECK(s.minima.at(d).lambda->lower <= r);
    }
    previous.clear();
    for (const auto& [d, r] : s.minima) {
      CHECK(d % 2 == 0);
      CHECK(d <= 10);
      previous[d] = r.lambda->lower;
    }
  }
}

TEST_CASE("search results do not depend on thread count") {
  const GeneratorSet gens = hessian_generators(table2_eckardt_pairs());
  SearchOptions a;
  a.max_length = 4;
  a.threads = 1;
  a.keep_reports = true;
  SearchOptions b = a;
  b.threads = 4;
  const SearchSummary x = exhaustive_search(gens, a), y = exhaustive_search(gens, b);
  CHECK(x.dedup_classes == y.dedup_classes);
  REQUIRE(x.reports.size() == y.reports.size());
  for (std::size_t i = 0; i < x.reports.size(); ++i) CHECK(x.reports[i].word == y.reports[i].word);
  for (const auto& [d, r] : x.minima) CHECK(y.minima.at(d).word == r.word);
}

TEST_CASE("word budget stops enumeration cleanly") {
  SearchOptions o;
  o.max_length = 5;
  o.word_budget = 100;
  const SearchSummary s = exhaustive_search(hessian_generators({}), o);
  CHECK(s.budget_exhausted);
  CHECK(s.words_examined == 100);
  SearchOptions bad;
  bad.max_length = 0;
  CHECK_THROWS_AS(exhaustive_search(hessian_generators({}), bad), InvalidArgument);
  bad.max_length = 11;
  bad.distinct_letters = true;
  CHECK_THROWS_AS(exhaustive_search(hessian_generators({}), bad), InvalidArgument);
}

TEST_CASE("Hessian distinct-letter search to length 7 reproduces the known per-degree minima") {
  SearchOptions o;
  o.max_length = 7;
  o.distinct_letters = true;
  const SearchSummary s = exhaustive_search(hessian_generators({}), o);
  CHECK(s.anomalies.empty());
  REQUIRE(s.minima.size() == 5);
  CHECK(s.minima.at(2).lambda->lower <= make_rational(47913, 10000));
  CHECK(s.minima.at(2).factorization.residual == IntPolynomial{1, -5, 1});
  CHECK(s.minima.at(4).lambda->truncated(4) == "4.3306");
  CHECK(s.minima.at(6).lambda->truncated(4) == "5.0015");
  CHECK(s.minima.at(8).lambda->truncated(4) == "6.7309");
  CHECK(s.minima.at(10).lambda->truncated(4) == "17.3775");
  CHECK(s.minima.at(10).factorization.residual ==
        IntPolynomial::parse("x^10-17x^9-6x^8-10x^7+5x^6-10x^5+5x^4-10x^3-6x^2-17x+1"));
}

TEST_CASE("random search is reproducible") {
  const GeneratorSet gens = hessian_generators({});
  SearchOptions o;
  o.max_length = 6;
  o.keep_reports = true;
  const SearchSummary a = random_search(gens, 300, 7, o);
  const SearchSummary b = random_search(gens, 300, 7, o);
  CHECK(a.seed == 7);
  CHECK(a.dedup_classes == b.dedup_classes);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) CHECK(a.reports[i].word == b.reports[i].word);
  const SearchSummary c = random_search(gens, 300, 8, o);
  bool differs = c.reports.size() != a.reports.size();
  for (std::size_t i = 0; !differs && i < a.reports.size(); ++i) {
    differs = a.reports[i].word != c.reports[i].word;
  }
  CHECK(differs);
}

TEST_CASE("random search edge cases") {
  SearchOptions o;
  o.max_length = 1;
  o.keep_reports = true;
  const SearchSummary s = random_search(hessian_generators({}), 1, 0, o);
  CHECK(s.words_examined == 1);
  REQUIRE(s.reports.size() == 1);
  CHECK(s.reports[0].classification() == Classification::kUnit);
  CHECK_THROWS_AS(random_search(hessian_generators({}), 0, 0, o), InvalidArgument);
}

TEST_CASE("random search finds the degree-4 minimum") {
  SearchOptions o;
  o.max_length = 4;
  o.distinct_letters = true;
  const SearchSummary s = random_search(hessian_generators({}), 3000, 1, o);
  REQUIRE(s.minima.count(4));
  CHECK(s.minima.at(4).lambda->lower <= make_rational(43306, 10000) + make_rational(1, 10000));
}

TEST_CASE("uniform_below stays in range and covers it") {
  std::mt19937_64 rng(1);
  std::vector<int> seen(7);
  for (int i = 0; i < 7000; ++i) {
    const auto v = uniform_below(rng, 7);
    REQUIRE(v < 7);
    ++seen[v];
  }
  for (int c : seen) CHECK(c > 800);
}

TEST_CASE("growth_count basics") {
  const GeneratorSet hess = hessian_generators({});
  const RatVector delta = petersen_model().delta;
  CHECK(growth_count(hess, delta, 9, 3).count == 0);
  const GrowthResult one = growth_count(hess, delta, 10, 3);
  CHECK(one.count >= 1);
  CHECK(one.complete);
  CHECK(one.radius_reached == 3);
  std::uint64_t last = 0;
  for (long r : {10, 20, 50, 100, 1000, 100000}) {
    const auto g = growth_count(hess, delta, r, 3);
    CHECK(g.count >= last);
    last = g.count;
  }
  CHECK_THROWS_AS(growth_count(hess, RatVector(10), 10, 2), InvalidArgument);
  CHECK_THROWS_AS(growth_count(hess, RatVector(3), 10, 2), DimensionMismatch);
}

TEST_CASE("growth_count reports budget exhaustion") {
  const auto g = growth_count(hessian_generators({}), petersen_model().delta, 1000, 5, 50);
  CHECK_FALSE(g.complete);
  CHECK(g.elements <= 50);
}

TEST_CASE("growth_count agrees with brute-force enumeration") {
  for (const auto& gens : {hessian_generators({}), experiment_generators(0),
                           hessian_generators(table2_eckardt_pairs())}) {
    const RatVector h =
        gens.model == ModelKind::kPetersen ? petersen_model().delta : f_model().delta;
    for (std::size_t len = 0; len <= 3; ++len) {
      for (long r : {10, 100, 10000}) {
        const auto fast = growth_count(gens, h, r, len);
        const auto slow = brute_growth(gens, h, r, len);
        CHECK(fast.count == slow.first);
        CHECK(fast.elements == slow.second);
      }
    }
  }
}
