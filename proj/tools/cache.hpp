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

#ifndef SALEMLAB_TOOLS_CACHE_HPP_
#define SALEMLAB_TOOLS_CACHE_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "salemlab/dynamics.hpp"

namespace salemlab::cli {

// Append-only JSON-lines store of reports keyed by generator-set digest and
// canonical word. A file with any unreadable line is discarded and rewritten
// from scratch on the next insert.
class JsonlCache : public ReportStore {
 public:
  JsonlCache(std::filesystem::path path, const GeneratorSet& generators);

  std::optional<SalemReport> find(const Word& canonical) override;
  void insert(const SalemReport& report) override;

  std::size_t size() const { return entries_.size(); }
  std::size_t hits() const { return hits_; }
  bool discarded() const { return discarded_; }

 private:
  std::filesystem::path path_;
  std::string key_;
  std::string family_;
  std::map<Word, SalemReport> entries_;
  std::size_t hits_ = 0;
  bool discarded_ = false;
  bool rewrite_pending_ = false;
};

// analyze() through an optional cache. The returned report carries `word`.
SalemReport analyze_cached(const Word& word, const GeneratorSet& generators,
                           ReportStore* cache);

}  // namespace salemlab::cli

#endif  // SALEMLAB_TOOLS_CACHE_HPP_
