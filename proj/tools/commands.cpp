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

#include "commands.hpp"

#include <iomanip>
#include <memory>
#include <sstream>

#include "cache.hpp"
#include "report_io.hpp"
#include "salemlab/error.hpp"

namespace salemlab::cli {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidArgument("invalid " + what + ": '" + s + "'");
  }
  return std::stoul(s);
}

std::unique_ptr<JsonlCache> open_cache(const Common& common, const GeneratorSet& gens) {
  if (!common.cache_path) return nullptr;
  return std::make_unique<JsonlCache>(*common.cache_path, gens);
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void text_report(std::ostream& out, const SalemReport& r) {
  out << "word            " << r.word.to_string() << '\n'
      << "char poly       " << r.char_poly.to_string() << '\n'
      << "cyclotomic      ";
  if (r.factorization.cyclotomic_part.empty()) out << "-";
  for (const auto& f : r.factorization.cyclotomic_part) {
    out << "Phi_" << f.index << (f.multiplicity > 1 ? "^" + std::to_string(f.multiplicity) : "")
        << ' ';
  }
  out << '\n'
      << "classification  " << to_string(r.classification()) << '\n'
      << "salem factor    " << salem_factor_text(r) << '\n'
      << "lambda          " << lambda_display(r);
  if (r.lambda) out << "  (" << r.lambda->decimal_hint << ")";
  out << '\n';
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw InvalidArgument("unknown format: " + name);
}

std::set<Pair> parse_eckardt(const std::string& spec) {
  if (spec == "none" || spec.empty()) return {};
  if (spec == "table2") return table2_eckardt_pairs();
  std::set<Pair> out;
  for (const auto& token : split(spec, ',')) {
    const auto p = parse_pair(token);
    if (!p) throw InvalidArgument("invalid pair '" + token + "' in Eckardt set");
    out.insert(*p);
  }
  return out;
}

GeneratorSet family_from_name(const std::string& name) {
  if (name == "exp1") return experiment_generators(0);
  if (name.rfind("exp2:", 0) == 0) {
    const std::size_t m = parse_count(name.substr(5), "m");
    if (m < 1 || m > 4) throw InvalidArgument("exp2 needs m in 1..4");
    return experiment_generators(m);
  }
  if (name == "hessian") return hessian_generators({});
  if (name.rfind("hessian:", 0) == 0) return hessian_generators(parse_eckardt(name.substr(8)));
  throw InvalidArgument("unknown family: " + name);
}

RatVector parse_h(const std::string& spec, const GeneratorSet& generators) {
  if (spec == "delta") {
    return generators.model == ModelKind::kFBasis ? f_model().delta : petersen_model().delta;
  }
  const auto parts = split(spec, ',');
  if (parts.size() != kLatticeRank) {
    throw InvalidArgument("h needs " + std::to_string(kLatticeRank) + " coordinates");
  }
  std::vector<Rational> coords;
  for (const auto& p : parts) coords.push_back(parse_rational(p));
  return RatVector(std::move(coords));
}

int cmd_experiment(std::size_t m, const Common& common, std::ostream& out) {
  if (m > 4) throw InvalidArgument("m must be in 1..4");
  const GeneratorSet gens = experiment_generators(m);
  auto cache = open_cache(common, gens);
  std::vector<SalemReport> rows;
  Word w{{1}};
  for (std::size_t k = 2; k <= kLatticeRank; ++k) {
    w.letters.push_back(k);
    rows.push_back(analyze_cached(w, gens, cache.get()));
  }
  const std::string command = m == 0 ? "experiment1" : "experiment2";
  switch (common.format) {
    case Format::kJson: {
      Json doc{{"command", command}, {"family", gens.family}, {"m", m}};
      Json list = Json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        list.push_back({{"k", i + 2},
                        {"hyperbolic", rows[i].is_salem()},
                        {"report", report_to_json(rows[i], gens.family)}});
      }
      doc["rows"] = std::move(list);
      emit_json(out, doc);
      break;
    }
    case Format::kCsv:
      out << "k,word,classification,salem_degree,salem_factor,lambda\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << i + 2 << ",\"" << r.word.to_string() << "\"," << to_string(r.classification())
            << ',' << r.salem_degree << ',' << salem_factor_text(r) << ','
            << lambda_display(r) << '\n';
      }
      break;
    case Format::kText:
      out << gens.family << "  (c_k = g_1 ... g_k)\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << "k=" << std::setw(2) << std::left << i + 2 << "  " << std::setw(10)
            << std::right << lambda_display(r) << "  "
            << (r.is_salem() ? salem_factor_text(r) : "not hyperbolic") << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_hessian(const std::string& word, const std::string& eckardt,
                const Common& common, std::ostream& out) {
  const GeneratorSet gens = hessian_generators(parse_eckardt(eckardt));
  const Word w = Word::parse(word);
  if (w.empty()) throw InvalidArgument("empty word");
  auto cache = open_cache(common, gens);
  const SalemReport r = analyze_cached(w, gens, cache.get());
  switch (common.format) {
    case Format::kJson:
      emit_json(out, report_to_json(r, gens.family));
      break;
    case Format::kCsv:
      out << "word,classification,salem_degree,salem_factor,lambda\n"
          << '"' << r.word.to_string() << "\"," << to_string(r.classification()) << ','
          << r.salem_degree << ',' << salem_factor_text(r) << ',' << lambda_display(r)
          << '\n';
      break;
    case Format::kText:
      out << "family          " << gens.family << '\n';
      text_report(out, r);
      break;
  }
  return kExitOk;
}

int cmd_search(const SearchConfig& config, const Common& common, std::ostream& out) {
  const GeneratorSet gens = family_from_name(config.family);
  if (config.mode != "exhaustive" && config.mode != "random") {
    throw InvalidArgument("mode must be exhaustive or random");
  }
  auto cache = open_cache(common, gens);
  SearchOptions options;
  options.max_length = config.max_len;
  options.distinct_letters = config.distinct;
  options.word_budget = config.budget;
  options.threads = config.threads;
  options.keep_reports = config.keep_reports;
  options.store = cache.get();
  const bool random = config.mode == "random";
  const SearchSummary s = random ? random_search(gens, config.trials, config.seed, options)
                                 : exhaustive_search(gens, options);
  switch (common.format) {
    case Format::kJson: {
      Json doc{{"command", "search"},
               {"family", gens.family},
               {"digest", gens.digest()},
               {"mode", config.mode},
               {"max_len", config.max_len},
               {"distinct", config.distinct}};
      if (random) {
        doc["trials"] = config.trials;
        doc["seed"] = config.seed;
      }
      doc["words_examined"] = s.words_examined;
      doc["dedup_classes"] = s.dedup_classes;
      doc["budget_exhausted"] = s.budget_exhausted;
      Json minima = Json::array();
      for (const auto& [degree, r] : s.minima) {
        minima.push_back({{"degree", degree}, {"report", report_to_json(r, gens.family)}});
      }
      doc["minima"] = std::move(minima);
      Json anomalies = Json::array();
      for (const auto& r : s.anomalies) anomalies.push_back(report_to_json(r, gens.family));
      doc["anomalies"] = std::move(anomalies);
      if (config.keep_reports) {
        Json all = Json::array();
        for (const auto& r : s.reports) all.push_back(report_to_json(r, gens.family));
        doc["reports"] = std::move(all);
      }
      emit_json(out, doc);
      break;
    }
    case Format::kCsv: {
      out << "degree,word,salem_factor,lambda\n";
      auto row = [&out](const SalemReport& r) {
        out << r.salem_degree << ",\"" << r.word.to_string() << "\"," << salem_factor_text(r)
            << ',' << lambda_display(r) << '\n';
      };
      for (const auto& [degree, r] : s.minima) row(r);
      if (config.keep_reports) {
        out << "# all classes\n";
        for (const auto& r : s.reports) row(r);
      }
      break;
    }
    case Format::kText:
      out << "family " << gens.family << ", " << config.mode << ", max length "
          << config.max_len << (config.distinct ? ", distinct letters" : "") << '\n'
          << "words examined " << s.words_examined << ", classes " << s.dedup_classes
          << (s.budget_exhausted ? ", BUDGET EXHAUSTED" : "") << '\n';
      for (const auto& [degree, r] : s.minima) {
        out << "d=" << std::setw(2) << std::left << degree << "  " << std::setw(10)
            << std::right << lambda_display(r) << "  " << std::setw(20) << std::left
            << r.word.to_string() << ' ' << salem_factor_text(r) << '\n';
      }
      for (const auto& r : s.anomalies) out << "anomalous " << r.word.to_string() << '\n';
      break;
  }
  return s.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_growth(const GrowthConfig& config, const Common& common, std::ostream& out) {
  const GeneratorSet gens = family_from_name(config.family);
  const RatVector h = parse_h(config.h, gens);
  const Rational r = parse_rational(config.r);
  const GrowthResult g = growth_count(gens, h, r, config.max_len, config.budget);
  switch (common.format) {
    case Format::kJson: {
      Json hv = Json::array();
      for (const auto& c : h.entries()) hv.push_back(to_string(c));
      emit_json(out, Json{{"command", "growth"},
                          {"family", gens.family},
                          {"h", std::move(hv)},
                          {"r", to_string(r)},
                          {"max_len", config.max_len},
                          {"count", g.count},
                          {"elements", g.elements},
                          {"radius_reached", g.radius_reached},
                          {"complete", g.complete}});
      break;
    }
    case Format::kCsv:
      out << "family,r,max_len,count,elements,radius_reached,complete\n"
          << gens.family << ',' << to_string(r) << ',' << config.max_len << ',' << g.count
          << ',' << g.elements << ',' << g.radius_reached << ','
          << (g.complete ? "true" : "false") << '\n';
      break;
    case Format::kText:
      out << "N(r=" << to_string(r) << ") = " << g.count << " over " << g.elements
          << " elements within radius " << g.radius_reached
          << (g.complete ? "" : " (budget exhausted)") << '\n';
      break;
  }
  return g.complete ? kExitOk : kExitBudget;
}

}  // namespace salemlab::cli
