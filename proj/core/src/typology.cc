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

#include "funcword/typology.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "funcword/inventory.h"

namespace funcword {
namespace {

bool IsBoundaryFunctionTarget(Upos tag) {
  return tag == Upos::kAdp || tag == Upos::kDet || tag == Upos::kSconj ||
         tag == Upos::kCconj;
}

bool IsBoundaryContentTarget(Upos tag) {
  return tag == Upos::kAdj || tag == Upos::kNum;
}

double Ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

FrequencyProfile ComputeFrequencyProfile(const Treebank& treebank) {
  struct TypeCounts {
    std::int64_t function = 0;
    std::int64_t content = 0;
  };
  std::unordered_map<std::string, TypeCounts> types;
  std::int64_t total = 0;
  for (const Sentence& s : treebank.sentences) {
    for (const Token& t : s.tokens()) {
      const WordClass wc = ClassifyPosOnly(t.upos);
      if (wc.kind == WordClassKind::kExcluded) continue;
      TypeCounts& c = types[LowercaseForm(t.form)];
      (wc.is_function() ? c.function : c.content) += 1;
      ++total;
    }
  }
  if (total == 0) throw std::invalid_argument("no linguistic tokens");

  FrequencyProfile profile;
  std::int64_t function_types = 0;
  std::int64_t function_tokens = 0;
  for (const auto& [form, c] : types) {
    if (c.function >= c.content) {
      ++function_types;
      function_tokens += c.function + c.content;
    }
  }
  profile.vocab_size = static_cast<std::int64_t>(types.size());
  profile.token_total = total;
  profile.type_ratio_function = Ratio(function_types, profile.vocab_size);
  profile.type_ratio_content = 1.0 - profile.type_ratio_function;
  profile.token_ratio_function = Ratio(function_tokens, total);
  profile.token_ratio_content = 1.0 - profile.token_ratio_function;
  return profile;
}

double EntropyBits(const std::map<Upos, std::int64_t>& histogram) {
  std::int64_t total = 0;
  for (const auto& [tag, n] : histogram) total += n;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (const auto& [tag, n] : histogram) {
    if (n == 0) continue;
    const double p = static_cast<double>(n) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

EntropyProfile ComputeNeighborEntropy(const Treebank& treebank) {
  std::map<Upos, std::map<Upos, std::int64_t>> neighbor_tags;
  EntropyProfile profile;
  for (const Sentence& s : treebank.sentences) {
    for (const Token& t : s.tokens()) {
      if (IsNonLinguistic(t.upos)) continue;
      ++profile.tag_frequencies[t.upos];
      for (int j : UndirectedNeighbors(s, t.index)) {
        const Upos other = s.token(j).upos;
        if (IsNonLinguistic(other)) continue;
        ++neighbor_tags[t.upos][other];
      }
    }
  }

  double f_num = 0.0, f_den = 0.0, c_num = 0.0, c_den = 0.0;
  for (const auto& [tag, hist] : neighbor_tags) {
    const double h = EntropyBits(hist);
    profile.per_tag_entropy[tag] = h;
    const double freq = static_cast<double>(profile.tag_frequencies[tag]);
    if (IsClosedClass(tag)) {
      f_num += freq * h;
      f_den += freq;
    } else {
      c_num += freq * h;
      c_den += freq;
    }
  }
  profile.weighted_function_entropy = f_den > 0 ? f_num / f_den : 0.0;
  profile.weighted_content_entropy = c_den > 0 ? c_num / c_den : 0.0;
  return profile;
}

bool IsAtBoundary(const Sentence& sentence, int index,
                  const BoundaryOptions& options) {
  const Token& target = sentence.token(index);
  if (target.head == 0) return false;
  const std::vector<int> yield = SubtreeYield(sentence, target.head);
  const int left = yield.front();
  const int right = yield.back();
  if (index == left || index == right) return true;
  if (!options.relaxation || !IsBoundaryFunctionTarget(target.upos)) {
    return false;
  }

  auto in_yield = [&](int i) {
    return std::binary_search(yield.begin(), yield.end(), i);
  };
  auto is_marker = [&](int i) {
    return in_yield(i) && IsBoundaryFunctionTarget(sentence.token(i).upos);
  };
  // Walk from the target toward one periphery through function words only.
  auto reaches = [&](int step, int periphery) {
    const int first = index + step;
    if (!options.transitive) return first == periphery && is_marker(first);
    for (int i = first;; i += step) {
      if (!is_marker(i)) return false;
      if (i == periphery) return true;
    }
  };
  return reaches(-1, left) || reaches(+1, right);
}

BoundaryProfile ComputeBoundaryProfile(const Treebank& treebank,
                                       const BoundaryOptions& options) {
  BoundaryProfile profile;
  for (const Sentence& s : treebank.sentences) {
    for (const Token& t : s.tokens()) {
      if (t.head == 0) continue;
      const bool function = IsBoundaryFunctionTarget(t.upos);
      const bool content = IsBoundaryContentTarget(t.upos);
      if (!function && !content) continue;
      const bool boundary = IsAtBoundary(s, t.index, options);
      if (function) {
        ++profile.counted_function_tokens;
        profile.boundary_function_tokens += boundary;
      } else {
        ++profile.counted_content_tokens;
        profile.boundary_content_tokens += boundary;
      }
    }
  }
  profile.function_boundary_ratio =
      Ratio(profile.boundary_function_tokens, profile.counted_function_tokens);
  profile.content_boundary_ratio =
      Ratio(profile.boundary_content_tokens, profile.counted_content_tokens);
  return profile;
}

ComplexityProfile ComputeComplexityProfile(const Treebank& treebank) {
  ComplexityProfile profile;
  std::int64_t tokens = 0;
  std::int64_t distance = 0;
  for (const Sentence& s : treebank.sentences) {
    tokens += s.size();
    for (const Token& t : s.tokens()) {
      if (t.head == 0) continue;
      distance += std::abs(t.head - t.index);
      ++profile.arc_count;
    }
  }
  profile.sentence_count = static_cast<std::int64_t>(treebank.sentences.size());
  profile.mean_sentence_length = Ratio(tokens, profile.sentence_count);
  profile.mean_dependency_distance = Ratio(distance, profile.arc_count);
  return profile;
}

}  // namespace funcword
