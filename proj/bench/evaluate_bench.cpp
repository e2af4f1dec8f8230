// Copyright 2026 The RDASS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference against the OpenMP evaluator on a synthetic corpus.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "rdass/backends.hpp"
#include "rdass/corpus.hpp"
#include "rdass/random.hpp"

namespace {

std::vector<rdass::EvalExample> make_corpus(size_t n) {
  static const char* kWords[] = {"river", "council", "budget", "storm",
                                 "school", "market", "road",   "library",
                                 "season", "model",   "rain",  "town"};
  rdass::SeededRng rng(99);
  auto sentence = [&](size_t len) {
    std::string s;
    for (size_t i = 0; i < len; ++i) {
      if (i) s += ' ';
      s += kWords[rng.index(std::size(kWords))];
    }
    return s;
  };
  std::vector<rdass::EvalExample> out;
  for (size_t i = 0; i < n; ++i) {
    out.push_back({"b" + std::to_string(i), sentence(400), sentence(40),
                   sentence(40), std::nullopt});
  }
  return out;
}

const std::vector<rdass::EvalExample>& corpus() {
  static const auto c = make_corpus(512);
  return c;
}

void BM_EvaluateSerial(benchmark::State& state) {
  rdass::HashBackend backend(256);
  rdass::EvaluationConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdass::evaluate_serial(corpus(), backend, config));
  }
  state.SetItemsProcessed(state.iterations() * corpus().size());
}
BENCHMARK(BM_EvaluateSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EvaluateParallel(benchmark::State& state) {
  rdass::HashBackend backend(256);
  rdass::EvaluationConfig config;
  config.workers = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdass::evaluate(corpus(), backend, config));
  }
  state.SetItemsProcessed(state.iterations() * corpus().size());
}
BENCHMARK(BM_EvaluateParallel)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
