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

// salemlab: reproduce the dynamical-degree tables and search for small
// Salem numbers among products of lattice involutions.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "salemlab/error.hpp"

namespace cli = salemlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact dynamical degrees of Enriques-lattice involution products"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string cache;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache", cache, "JSON-lines result cache");

  auto* exp1 = app.add_subcommand("experiment1", "Products c_k of the ten double-plane involutions");

  std::size_t m = 1;
  auto* exp2 = app.add_subcommand("experiment2", "As experiment1 with m nodal classes");
  exp2->add_option("--m", m, "Number of nodal classes")->required()->check(CLI::Range(1, 4));

  std::string word;
  std::string eckardt = "none";
  auto* hessian = app.add_subcommand("hessian", "Analyze a word in the Hessian involutions");
  hessian->add_option("--word", word, "Comma separated pair indices 1..10")->required();
  hessian->add_option("--eckardt", eckardt, "Eckardt pairs: table2, none, or e.g. 12,13");

  cli::SearchConfig search_cfg;
  auto* search = app.add_subcommand("search", "Search for small Salem numbers per degree");
  search->add_option("--family", search_cfg.family, "exp1 | exp2:<m> | hessian[:<eckardt>]");
  search->add_option("--mode", search_cfg.mode, "Enumeration mode")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  search->add_option("--max-len", search_cfg.max_len, "Maximal word length")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_flag("--distinct", search_cfg.distinct, "Pairwise distinct letters");
  search->add_option("--trials", search_cfg.trials, "Random words to draw")
      ->check(CLI::PositiveNumber);
  search->add_option("--seed", search_cfg.seed, "Random seed");
  search->add_option("--budget", search_cfg.budget, "Word budget")->check(CLI::PositiveNumber);
  search->add_option("--threads", search_cfg.threads, "Worker threads (0: all cores)");
  search->add_flag("--keep-reports", search_cfg.keep_reports, "Emit every analyzed class");

  cli::GrowthConfig growth_cfg;
  auto* growth = app.add_subcommand("growth", "Count g with (g h, h) <= r");
  growth->set_help_flag("--help", "Print this help message and exit");
  growth->add_option("--family", growth_cfg.family, "exp1 | exp2:<m> | hessian[:<eckardt>]");
  growth->add_option("--h", growth_cfg.h, "delta, or ten comma separated rationals");
  growth->add_option("--r", growth_cfg.r, "Bound, a rational")->required();
  growth->add_option("--max-len", growth_cfg.max_len, "Ball radius")->required();
  growth->add_option("--budget", growth_cfg.budget, "Element budget")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    cli::Common common;
    common.format = cli::parse_format(format);
    if (!cache.empty()) common.cache_path = cache;
    if (*exp1) return cli::cmd_experiment(0, common, std::cout);
    if (*exp2) return cli::cmd_experiment(m, common, std::cout);
    if (*hessian) return cli::cmd_hessian(word, eckardt, common, std::cout);
    if (*search) return cli::cmd_search(search_cfg, common, std::cout);
    if (*growth) return cli::cmd_growth(growth_cfg, common, std::cout);
  } catch (const salemlab::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return cli::kExitInternal;
  }
  return cli::kExitUsage;
}
