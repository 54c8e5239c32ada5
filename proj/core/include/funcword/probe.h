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

#ifndef FUNCWORD_PROBE_H_
#define FUNCWORD_PROBE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace funcword {

// Attention of one sentence from an external model run. Word indices are
// 0-based.
struct AttentionBundle {
  std::string sentence_id;
  std::string subcategory;
  int layers = 0;
  int heads = 0;
  int seq_len = 0;  // subword count S
  // Row-major [layers, heads, S, S]; row s holds the attention from subword s.
  std::vector<double> attention;
  std::vector<int> alignment;  // subword -> word
  std::vector<std::string> word_forms;
  std::vector<bool> function_flags;

  int word_count() const { return static_cast<int>(word_forms.size()); }
  double at(int layer, int head, int from, int to) const {
    const std::size_t s = static_cast<std::size_t>(seq_len);
    return attention[((static_cast<std::size_t>(layer) * heads + head) * s + from) * s +
                     to];
  }
};

// Shape and alignment checks: tensor size, non-negative finite weights,
// alignment total, monotone and without gaps, one flag per word. Returns the
// first problem found.
std::optional<std::string> CheckBundleShape(const AttentionBundle& bundle);

// CheckBundleShape plus every row summing to 1 within `tolerance`.
std::optional<std::string> ValidateBundle(const AttentionBundle& bundle,
                                          double tolerance = 1e-4);

// Word-level strengths for every (layer, head).
class WordAttention {
 public:
  WordAttention(int layers, int heads, int words);

  int layers() const { return layers_; }
  int heads() const { return heads_; }
  int words() const { return words_; }

  double at(int layer, int head, int i, int j) const { return data_[Offset(layer, head, i, j)]; }
  double& at(int layer, int head, int i, int j) { return data_[Offset(layer, head, i, j)]; }

 private:
  std::size_t Offset(int layer, int head, int i, int j) const {
    const std::size_t w = static_cast<std::size_t>(words_);
    return ((static_cast<std::size_t>(layer) * heads_ + head) * w + i) * w + j;
  }

  int layers_;
  int heads_;
  int words_;
  std::vector<double> data_;
};

// D[i->j]: for each subword of word i, the attention summed over word j's
// subwords, then averaged over word i's subwords. Throws
// std::invalid_argument if the shape checks fail.
WordAttention DirectedWordAttention(const AttentionBundle& bundle);

// a_ij = max(D[i->j], D[j->i]).
WordAttention WordLevelAttention(const AttentionBundle& bundle);

// argmax over j != target of a_ij, ties to the smaller index. Throws
// std::invalid_argument("no candidate parent") for a one-word sentence and
// std::out_of_range for a bad target, layer or head.
int PredictParent(const WordAttention& matrix, int layer, int head, int target);

enum class TargetPolicy {
  kNonPunctuation,  // every word whose form is not all ASCII punctuation
  kAllWords,
  kContentWords,  // non-punctuation words that are not function-flagged
};

std::string_view TargetPolicyName(TargetPolicy policy);
std::optional<TargetPolicy> ParseTargetPolicy(std::string_view name);

bool IsPunctuationForm(std::string_view form);
std::vector<int> SelectTargets(const AttentionBundle& bundle, TargetPolicy policy);

struct HeadScore {
  int layer = 0;
  int head = 0;
  double score = 0.0;  // hits / n_targets
  int hits = 0;
  int n_targets = 0;
};

// Fraction of targets whose predicted parent is function-flagged. Throws
// std::invalid_argument on empty targets.
HeadScore FunctionAttentionScore(const AttentionBundle& bundle,
                                 const WordAttention& matrix, int layer, int head,
                                 const std::vector<int>& targets);

enum class Aggregation {
  kPooled,        // hits and targets summed over the subcategory
  kSentenceMean,  // mean of per-sentence scores
};

struct SubcategoryDominance {
  std::string subcategory;
  int layer = 0;
  int head = 0;
  double score = 0.0;
  std::vector<double> head_scores;  // [layer * heads + head]
  int bundle_count = 0;
  int target_count = 0;
};

struct DominanceResult {
  int layers = 0;
  int heads = 0;
  std::vector<SubcategoryDominance> subcategories;  // sorted by name
  // Number of subcategories in which each (layer, head) is dominant.
  std::vector<int> histogram;
};

struct ProbeOptions {
  TargetPolicy targets = TargetPolicy::kNonPunctuation;
  Aggregation aggregation = Aggregation::kPooled;
  int jobs = 1;
};

// Groups bundles by subcategory and returns the head with the highest
// aggregate score per group, ties to the lowest (layer, head). Bundles
// without targets contribute nothing. Throws std::invalid_argument when
// bundles disagree on layer or head counts or fail the shape checks.
DominanceResult DominantHeads(const std::vector<AttentionBundle>& bundles,
                              const ProbeOptions& options = {});

enum class MaskMode { kMaskFunction, kNone };

std::string_view MaskModeName(MaskMode mode);
std::optional<MaskMode> ParseMaskMode(std::string_view name);

struct AblationMask {
  std::string sentence_id;
  std::vector<int> positions;  // sorted subword indices
  MaskMode mode = MaskMode::kNone;

  bool operator==(const AblationMask&) const = default;
};

AblationMask BuildMask(const AttentionBundle& bundle, MaskMode mode);

}  // namespace funcword

#endif  // FUNCWORD_PROBE_H_
