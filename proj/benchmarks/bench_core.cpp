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

#include <benchmark/benchmark.h>

#include "salemlab/dynamics.hpp"
#include "salemlab/linalg.hpp"

namespace {

using namespace salemlab;

void BM_CharPoly(benchmark::State& state) {
  const GeneratorSet gens = hessian_generators({});
  const IntMatrix m = compose(gens, Word{{1, 5, 8, 4, 7, 9, 10}});
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly);

void BM_Analyze(benchmark::State& state) {
  const GeneratorSet gens = experiment_generators(0);
  Word w;
  for (std::size_t i = 1; i <= static_cast<std::size_t>(state.range(0)); ++i) w.letters.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(w, gens));
}
BENCHMARK(BM_Analyze)->DenseRange(3, 10, 7);

void BM_ExhaustiveSearch(benchmark::State& state) {
  const GeneratorSet gens = hessian_generators({});
  SearchOptions opts;
  opts.max_length = static_cast<std::size_t>(state.range(0));
  opts.distinct_letters = true;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(gens, opts));
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Growth(benchmark::State& state) {
  const GeneratorSet gens = hessian_generators({});
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth_count(gens, petersen_model().delta, 100, 4));
  }
}
BENCHMARK(BM_Growth)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
