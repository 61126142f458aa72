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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cache.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "report_io.hpp"
#include "salemlab/error.hpp"

using namespace salemlab;
using namespace salemlab::cli;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const char* dir = std::getenv("SALEMLAB_TEST_TMP");
  std::filesystem::path p = dir ? dir : std::filesystem::temp_directory_path().string();
  p /= name;
  std::filesystem::remove(p);
  return p;
}

std::string run(int (*fn)(const SearchConfig&, const Common&, std::ostream&),
                const SearchConfig& c, const Common& common, int* code = nullptr) {
  std::ostringstream out;
  const int rc = fn(c, common, out);
  if (code) *code = rc;
  return out.str();
}

}  // namespace

TEST_CASE("report JSON round trip is byte identical") {
  const GeneratorSet hess = hessian_generators({});
  const GeneratorSet eck = hessian_generators(table2_eckardt_pairs());
  for (const auto& [word, gens] : {std::pair{Word{{1, 2, 3, 4, 5, 6, 7}}, &hess},
                                   std::pair{Word{{1, 5, 8, 4, 7, 5, 4, 10}}, &eck},
                                   std::pair{Word{{1}}, &hess}}) {
    const SalemReport r = analyze(word, *gens);
    const Json j = report_to_json(r, gens->family);
    std::string family;
    const SalemReport back = report_from_json(Json::parse(j.dump()), &family);
    CHECK(family == gens->family);
    CHECK(report_to_json(back, family).dump() == j.dump());
    CHECK(back.char_poly == r.char_poly);
    CHECK(back.factorization.residual == r.factorization.residual);
    CHECK(back.lambda.has_value() == r.lambda.has_value());
    if (r.lambda) CHECK(back.lambda->lower == r.lambda->lower);
  }
}

TEST_CASE("large integers survive JSON as strings") {
  const Integer big = Integer(1) << 70;
  const Json j = integer_to_json(big);
  CHECK(j.is_string());
  CHECK(integer_from_json(Json::parse(j.dump())) == big);
  CHECK(integer_to_json(Integer(-42)).is_number_integer());
  CHECK(integer_from_json(Json(-42)) == -42);
  const IntPolynomial p(std::vector<Integer>{-big, 3, 1});
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  CHECK_THROWS_AS(integer_from_json(Json("12x")), InvalidArgument);
}

TEST_CASE("lambda display") {
  const GeneratorSet exp1 = experiment_generators(0);
  CHECK(lambda_display(analyze(Word{{1, 2}}, exp1)) == "1.0000");
  CHECK(salem_factor_text(analyze(Word{{1, 2}}, exp1)) == "1");
  CHECK(lambda_display(analyze(Word{{1, 2, 3}}, exp1)) == "15.1450");
}

TEST_CASE("csv lambdas carry four decimals") {
  std::ostringstream out;
  Common common;
  common.format = Format::kCsv;
  CHECK(cmd_experiment(2, common, out) == kExitOk);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "k,word,classification,salem_degree,salem_factor,lambda");
  std::size_t rows = 0;
  const std::regex last(R"(,[0-9]+\.[0-9]{4}$)");
  while (std::getline(lines, line)) {
    ++rows;
    CHECK_MESSAGE(std::regex_search(line, last), line);
  }
  CHECK(rows == 9);
}

TEST_CASE("family names and Eckardt specs") {
  CHECK(family_from_name("exp1").family == "exp1");
  CHECK(family_from_name("exp2:3").family == "exp2:3");
  CHECK(family_from_name("hessian").family == "hessian");
  CHECK(family_from_name("hessian:table2").digest() ==
        hessian_generators(table2_eckardt_pairs()).digest());
  CHECK_THROWS_AS(family_from_name("exp2:5"), InvalidArgument);
  CHECK_THROWS_AS(family_from_name("exp2:x"), InvalidArgument);
  CHECK_THROWS_AS(family_from_name("exp3"), InvalidArgument);

  CHECK(parse_eckardt("none").empty());
  CHECK(parse_eckardt("").empty());
  CHECK(parse_eckardt("table2") == table2_eckardt_pairs());
  CHECK(parse_eckardt("21,34") == std::set<Pair>{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(parse_eckardt("16"), InvalidArgument);
  CHECK_THROWS_AS(parse_eckardt("11"), InvalidArgument);
  CHECK_THROWS_AS(parse_eckardt("12,,13"), InvalidArgument);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("cache: populate, hit, corrupt rebuild") {
  const GeneratorSet gens = hessian_generators({});
  const auto path = scratch("cache_test.jsonl");
  const Word w{{2, 6, 1, 3}};
  SalemReport first;
  {
    JsonlCache cache(path, gens);
    first = analyze_cached(w, gens, &cache);
    CHECK(cache.size() == 1);
    CHECK(cache.hits() == 0);
  }
  {
    JsonlCache cache(path, gens);
    CHECK(cache.size() == 1);
    // A rotation of the same word is the same conjugacy class.
    const SalemReport again = analyze_cached(Word{{1, 3, 2, 6}}, gens, &cache);
    CHECK(cache.hits() == 1);
    CHECK(again.factorization.residual == first.factorization.residual);
    CHECK(again.lambda->lower == first.lambda->lower);
    CHECK(again.word == (Word{{1, 3, 2, 6}}));
  }
  {
    // Another generator set must not see these entries.
    JsonlCache other(path, hessian_generators(table2_eckardt_pairs()));
    CHECK(other.size() == 0);
  }
  {
    std::ofstream(path, std::ios::app) << "{not json\n";
    JsonlCache cache(path, gens);
    CHECK(cache.discarded());
    CHECK(cache.size() == 0);
    analyze_cached(w, gens, &cache);
  }
  {
    JsonlCache cache(path, gens);
    CHECK_FALSE(cache.discarded());
    CHECK(cache.size() == 1);
  }
  std::filesystem::remove(path);
}

TEST_CASE("cached search equals uncached search") {
  SearchConfig c;
  c.family = "hessian:table2";
  c.max_len = 3;
  c.keep_reports = true;
  Common json;
  json.format = Format::kJson;
  const std::string plain = run(cmd_search, c, json);
  Common cached = json;
  cached.cache_path = scratch("search_cache.jsonl").string();
  const std::string cold = run(cmd_search, c, cached);
  const std::string warm = run(cmd_search, c, cached);
  CHECK(cold == plain);
  CHECK(warm == plain);
  std::filesystem::remove(*cached.cache_path);
}

TEST_CASE("random search output is deterministic for a seed") {
  SearchConfig c;
  c.mode = "random";
  c.max_len = 6;
  c.trials = 200;
  c.seed = 99;
  Common json;
  json.format = Format::kJson;
  const std::string a = run(cmd_search, c, json);
  CHECK(a == run(cmd_search, c, json));
  c.seed = 100;
  CHECK(a != run(cmd_search, c, json));
  const Json parsed = Json::parse(a);
  CHECK(parsed["seed"] == 99);
  CHECK(parsed["mode"] == "random");
}

TEST_CASE("budget exhaustion exits with code 3") {
  SearchConfig c;
  c.max_len = 4;
  c.budget = 20;
  Common json;
  json.format = Format::kJson;
  int code = 0;
  const std::string out = run(cmd_search, c, json, &code);
  CHECK(code == kExitBudget);
  CHECK(Json::parse(out)["budget_exhausted"] == true);

  GrowthConfig g;
  g.max_len = 5;
  g.budget = 30;
  std::ostringstream gout;
  CHECK(cmd_growth(g, json, gout) == kExitBudget);
  CHECK(Json::parse(gout.str())["complete"] == false);
}

TEST_CASE("growth with an explicit vector") {
  GrowthConfig g;
  g.family = "exp1";
  g.h = "1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3,0";
  g.max_len = 2;
  Common json;
  json.format = Format::kJson;
  std::ostringstream out;
  CHECK(cmd_growth(g, json, out) == kExitOk);
  CHECK(Json::parse(out.str())["elements"] == 1 + 10 + 90);
  g.h = "1,2";
  CHECK_THROWS_AS(cmd_growth(g, json, out), InvalidArgument);
}
