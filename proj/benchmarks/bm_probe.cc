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

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "funcword/probe.h"
#include "funcword/rng.h"

namespace funcword {
namespace {

// Roughly BERT-base shaped: 12 x 12 heads, `words` words of 1-2 subwords.
AttentionBundle MakeBundle(Rng& rng, int words, int index) {
  AttentionBundle b;
  b.sentence_id = "s" + std::to_string(index);
  b.subcategory = "cat" + std::to_string(index % 8);
  b.layers = 12;
  b.heads = 12;
  for (int w = 0; w < words; ++w) {
    b.word_forms.push_back("w" + std::to_string(w));
    b.function_flags.push_back(rng.Below(3) == 0);
    const int pieces = 1 + static_cast<int>(rng.Below(2));
    for (int p = 0; p < pieces; ++p) b.alignment.push_back(w);
  }
  b.seq_len = static_cast<int>(b.alignment.size());
  const std::size_t s = static_cast<std::size_t>(b.seq_len);
  b.attention.resize(static_cast<std::size_t>(b.layers * b.heads) * s * s);
  for (std::size_t row = 0; row < b.attention.size() / s; ++row) {
    double total = 0;
    for (std::size_t j = 0; j < s; ++j) {
      b.attention[row * s + j] = 1.0 + static_cast<double>(rng.Below(64));
      total += b.attention[row * s + j];
    }
    for (std::size_t j = 0; j < s; ++j) b.attention[row * s + j] /= total;
  }
  return b;
}

void BM_WordLevelAttention(benchmark::State& state) {
  Rng rng(7);
  const AttentionBundle bundle = MakeBundle(rng, static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(WordLevelAttention(bundle));
}
BENCHMARK(BM_WordLevelAttention)->Arg(10)->Arg(25)->Arg(50);

void BM_DominantHeads(benchmark::State& state) {
  Rng rng(11);
  std::vector<AttentionBundle> bundles;
  for (int i = 0; i < 200; ++i) {
    bundles.push_back(MakeBundle(rng, 5 + static_cast<int>(rng.Below(20)), i));
  }
  ProbeOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(DominantHeads(bundles, options));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(bundles.size()));
}
BENCHMARK(BM_DominantHeads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace funcword
