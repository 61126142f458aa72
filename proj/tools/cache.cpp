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

#include "cache.hpp"

#include <fstream>

#include "report_io.hpp"
#include "salemlab/error.hpp"

namespace salemlab::cli {

JsonlCache::JsonlCache(std::filesystem::path path, const GeneratorSet& generators)
    : path_(std::move(path)), key_(generators.digest()), family_(generators.family) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      if (j.at("key").get<std::string>() != key_) continue;
      SalemReport r = report_from_json(j.at("report"));
      if (r.word != canonical_form(r.word)) throw InvalidArgument("non-canonical key");
      entries_.insert_or_assign(r.word, std::move(r));
    } catch (const std::exception&) {
      entries_.clear();
      discarded_ = true;
      rewrite_pending_ = true;
      return;
    }
  }
}

std::optional<SalemReport> JsonlCache::find(const Word& canonical) {
  auto it = entries_.find(canonical);
  if (it == entries_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void JsonlCache::insert(const SalemReport& report) {
  if (entries_.count(report.word)) return;
  const Json line{{"key", key_}, {"report", report_to_json(report, family_)}};
  std::ofstream out(path_, rewrite_pending_ ? std::ios::trunc : std::ios::app);
  if (!out) throw Error("cannot write cache file " + path_.string());
  rewrite_pending_ = false;
  out << line.dump() << '\n';
  entries_.emplace(report.word, report);
}

SalemReport analyze_cached(const Word& word, const GeneratorSet& generators,
                           ReportStore* cache) {
  if (!cache) return analyze(word, generators);
  for (std::size_t letter : word.letters) {
    if (letter < 1 || letter > generators.size()) {
      throw InvalidArgument("word letter " + std::to_string(letter) + " out of range");
    }
  }
  // Conjugate and inverse words have the same characteristic polynomial.
  const Word key = canonical_form(word);
  if (auto hit = cache->find(key)) {
    hit->word = word;
    return *hit;
  }
  SalemReport report = analyze(word, generators);
  SalemReport stored = report;
  stored.word = key;
  cache->insert(stored);
  return report;
}

}  // namespace salemlab::cli
