// Copyright 2026 The funcword Authors.
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

#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "funcword/conllu.h"
#include "funcword/counterfactual.h"
#include "funcword/inventory.h"
#include "funcword/typology.h"

namespace funcword {
namespace {

const std::string& EnglishText() {
  static const std::string text =
      ReadMaybeGzipped(std::string(FUNCWORD_BENCH_DATA_DIR) + "/treebanks/en_synthetic.conllu.gz");
  return text;
}

const Treebank& EnglishBank() {
  static const Treebank bank = [] {
    std::istringstream in(EnglishText());
    return ParseConllu(in, "en").treebank;
  }();
  return bank;
}

void BM_ParseConllu(benchmark::State& state) {
  const std::string& text = EnglishText();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(ParseConllu(in, "en"));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseConllu)->Unit(benchmark::kMillisecond);

void BM_Typology(benchmark::State& state) {
  const Treebank& bank = EnglishBank();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeFrequencyProfile(bank));
    benchmark::DoNotOptimize(ComputeNeighborEntropy(bank));
    benchmark::DoNotOptimize(ComputeBoundaryProfile(bank));
  }
}
BENCHMARK(BM_Typology)->Unit(benchmark::kMillisecond);

// Arg: Condition enum value.
void BM_ApplyCondition(benchmark::State& state) {
  const Corpus corpus = CorpusFromTreebank(EnglishBank());
  ConditionSpec spec;
  spec.condition = static_cast<Condition>(state.range(0));
  spec.seed = 1;
  state.SetLabel(std::string(ConditionName(spec.condition)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ApplyCondition(corpus, spec, FunctionInventory::English()));
  }
}
BENCHMARK(BM_ApplyCondition)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace funcword
