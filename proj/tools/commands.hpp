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

#ifndef SALEMLAB_TOOLS_COMMANDS_HPP_
#define SALEMLAB_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include "salemlab/dynamics.hpp"

namespace salemlab::cli {

enum class Format { kJson, kCsv, kText };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct Common {
  Format format = Format::kText;
  std::optional<std::string> cache_path;
};

Format parse_format(const std::string& name);

// "pairs" is a comma list like "12,13,34"; also "table2" and "none".
std::set<Pair> parse_eckardt(const std::string& spec);

// exp1 | exp2:<m> | hessian | hessian:<table2|none|pairs>
GeneratorSet family_from_name(const std::string& name);

// "delta" or a comma list of rationals in the family's coordinates.
RatVector parse_h(const std::string& spec, const GeneratorSet& generators);

struct SearchConfig {
  std::string family = "hessian";
  std::string mode = "exhaustive";
  std::size_t max_len = 1;
  bool distinct = false;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t budget = SearchOptions{}.word_budget;
  unsigned threads = 0;
  bool keep_reports = false;
};

struct GrowthConfig {
  std::string family = "hessian";
  std::string h = "delta";
  std::string r = "10";
  std::size_t max_len = 1;
  std::uint64_t budget = kDefaultGrowthBudget;
};

// Each returns a process exit code. InvalidArgument escapes to the caller.
int cmd_experiment(std::size_t m, const Common& common, std::ostream& out);
int cmd_hessian(const std::string& word, const std::string& eckardt,
                const Common& common, std::ostream& out);
int cmd_search(const SearchConfig& config, const Common& common, std::ostream& out);
int cmd_growth(const GrowthConfig& config, const Common& common, std::ostream& out);

}  // namespace salemlab::cli

#endif  // SALEMLAB_TOOLS_COMMANDS_HPP_
