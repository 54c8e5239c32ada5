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

#ifndef FUNCWORD_TYPOLOGY_H_
#define FUNCWORD_TYPOLOGY_H_

#include <array>
#include <cstdint>
#include <map>

#include "funcword/treebank.h"
#include "funcword/upos.h"

namespace funcword {

// Type and token shares of function vs. content words. Excluded tags are
// removed before either ratio is taken, so each pair sums to one.
struct FrequencyProfile {
  double type_ratio_function = 0.0;
  double type_ratio_content = 0.0;
  double token_ratio_function = 0.0;
  double token_ratio_content = 0.0;
  std::int64_t vocab_size = 0;
  std::int64_t token_total = 0;
};

// Neighbor-tag entropies in bits. Tags that never occur have no entry.
struct EntropyProfile {
  std::map<Upos, double> per_tag_entropy;
  double weighted_function_entropy = 0.0;
  double weighted_content_entropy = 0.0;
  std::map<Upos, std::int64_t> tag_frequencies;
};

struct BoundaryProfile {
  double function_boundary_ratio = 0.0;
  double content_boundary_ratio = 0.0;
  std::int64_t counted_function_tokens = 0;
  std::int64_t counted_content_tokens = 0;
  std::int64_t boundary_function_tokens = 0;
  std::int64_t boundary_content_tokens = 0;
};

struct ComplexityProfile {
  double mean_sentence_length = 0.0;
  double mean_dependency_distance = 0.0;
  std::int64_t sentence_count = 0;
  std::int64_t arc_count = 0;
};

struct BoundaryOptions {
  // Accept a target that is separated from the periphery of its head's
  // yield only by other function words.
  bool relaxation = true;
  // Let the relaxation chain across a run of function words rather than a
  // single adjacent one.
  bool transitive = true;
};

// Types are lowercased forms; a form seen under both classes goes to the
// class of its majority tag, ties to function. Throws std::invalid_argument
// if the treebank has no linguistic tokens.
FrequencyProfile ComputeFrequencyProfile(const Treebank& treebank);

// H(x) = -sum_t p(t|x) log2 p(t|x) over undirected dependency neighbors,
// pooled corpus-wide, and frequency-weighted class averages. Tokens with
// excluded tags neither receive an entropy nor count as neighbors.
EntropyProfile ComputeNeighborEntropy(const Treebank& treebank);

// Shannon entropy in bits of a histogram; zero counts are ignored.
double EntropyBits(const std::map<Upos, std::int64_t>& histogram);

// Function targets are ADP/DET/SCONJ/CCONJ, content baselines ADJ/NUM. A
// target is at a boundary when it is the leftmost or rightmost token of its
// head's subtree yield, or (relaxation, function targets only) when every
// token between it and that periphery is a function target. Root targets
// have no governing subtree and are not counted.
BoundaryProfile ComputeBoundaryProfile(const Treebank& treebank,
                                       const BoundaryOptions& options = {});

// Per-target boundary decision; exposed for tests and diagnostics.
bool IsAtBoundary(const Sentence& sentence, int index,
                  const BoundaryOptions& options);

ComplexityProfile ComputeComplexityProfile(const Treebank& treebank);

}  // namespace funcword

#endif  // FUNCWORD_TYPOLOGY_H_
