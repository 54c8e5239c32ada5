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

#include "funcword/probe.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

#include "funcword/parallel.h"

namespace funcword {
namespace {

std::string Describe(const AttentionBundle& b) {
  return "bundle '" + b.sentence_id + "': ";
}

void RequireShape(const AttentionBundle& bundle) {
  if (auto problem = CheckBundleShape(bundle)) {
    throw std::invalid_argument(Describe(bundle) + *problem);
  }
}

}  // namespace

std::optional<std::string> CheckBundleShape(const AttentionBundle& b) {
  if (b.layers < 1 || b.heads < 1 || b.seq_len < 1) {
    return "layers, heads and seq_len must be positive";
  }
  const std::size_t s = static_cast<std::size_t>(b.seq_len);
  const std::size_t expected =
      static_cast<std::size_t>(b.layers) * static_cast<std::size_t>(b.heads) * s * s;
  if (b.attention.size() != expected) {
    return "attention has " + std::to_string(b.attention.size()) +
           " values, expected " + std::to_string(expected);
  }
  for (double v : b.attention) {
    if (!std::isfinite(v) || v < 0.0) return "attention weights must be finite and >= 0";
  }
  if (b.alignment.size() != s) {
    return "alignment has " + std::to_string(b.alignment.size()) +
           " entries for " + std::to_string(s) + " subwords";
  }
  if (b.word_forms.empty()) return "no words";
  if (b.alignment.front() != 0) return "alignment must start at word 0";
  for (std::size_t k = 1; k < s; ++k) {
    const int step = b.alignment[k] - b.alignment[k - 1];
    if (step < 0) return "alignment is not monotone at subword " + std::to_string(k);
    if (step > 1) return "alignment gap before subword " + std::to_string(k);
  }
  if (b.alignment.back() != b.word_count() - 1) {
    return "alignment covers " + std::to_string(b.alignment.back() + 1) + " of " +
           std::to_string(b.word_count()) + " words";
  }
  if (b.function_flags.size() != b.word_forms.size()) {
    return "function_flags length differs from the word count";
  }
  return std::nullopt;
}

std::optional<std::string> ValidateBundle(const AttentionBundle& b, double tolerance) {
  if (auto problem = CheckBundleShape(b)) return problem;
  for (int l = 0; l < b.layers; ++l) {
    for (int h = 0; h < b.heads; ++h) {
      for (int from = 0; from < b.seq_len; ++from) {
        double sum = 0.0;
        for (int to = 0; to < b.seq_len; ++to) sum += b.at(l, h, from, to);
        if (std::fabs(sum - 1.0) > tolerance) {
          return "row " + std::to_string(from) + " of layer " + std::to_string(l) +
                 " head " + std::to_string(h) + " sums to " + std::to_string(sum);
        }
      }
    }
  }
  return std::nullopt;
}

WordAttention::WordAttention(int layers, int heads, int words)
    : layers_(layers),
      heads_(heads),
      words_(words),
      data_(static_cast<std::size_t>(layers) * heads * words * words, 0.0) {}

WordAttention DirectedWordAttention(const AttentionBundle& b) {
  RequireShape(b);
  const int w = b.word_count();
  std::vector<int> pieces(w, 0);
  for (int word : b.alignment) ++pieces[word];

  WordAttention d(b.layers, b.heads, w);
  for (int l = 0; l < b.layers; ++l) {
    for (int h = 0; h < b.heads; ++h) {
      // Sum over destination subwords first, then average over the source's.
      for (int from = 0; from < b.seq_len; ++from) {
        const int i = b.alignment[from];
        for (int to = 0; to < b.seq_len; ++to) {
          d.at(l, h, i, b.alignment[to]) += b.at(l, h, from, to);
        }
      }
      for (int i = 0; i < w; ++i) {
        for (int j = 0; j < w; ++j) d.at(l, h, i, j) /= pieces[i];
      }
    }
  }
  return d;
}

WordAttention WordLevelAttention(const AttentionBundle& b) {
  const WordAttention d = DirectedWordAttention(b);
  WordAttention a(d.layers(), d.heads(), d.words());
  for (int l = 0; l < d.layers(); ++l) {
    for (int h = 0; h < d.heads(); ++h) {
      for (int i = 0; i < d.words(); ++i) {
        for (int j = 0; j < d.words(); ++j) {
          a.at(l, h, i, j) = std::max(d.at(l, h, i, j), d.at(l, h, j, i));
        }
      }
    }
  }
  return a;
}

int PredictParent(const WordAttention& m, int layer, int head, int target) {
  if (layer < 0 || layer >= m.layers() || head < 0 || head >= m.heads()) {
    throw std::out_of_range("layer/head out of range");
  }
  if (target < 0 || target >= m.words()) {
    throw std::out_of_range("target word " + std::to_string(target) + " out of range");
  }
  if (m.words() < 2) throw std::invalid_argument("no candidate parent");
  int best = -1;
  double best_value = 0.0;
  for (int j = 0; j < m.words(); ++j) {
    if (j == target) continue;
    const double v = m.at(layer, head, target, j);
    if (best < 0 || v > best_value) {
      best = j;
      best_value = v;
    }
  }
  return best;
}

std::string_view TargetPolicyName(TargetPolicy policy) {
  switch (policy) {
    case TargetPolicy::kNonPunctuation:
      return "non-punct";
    case TargetPolicy::kAllWords:
      return "all";
    case TargetPolicy::kContentWords:
      return "content";
  }
  return "?";
}

std::optional<TargetPolicy> ParseTargetPolicy(std::string_view name) {
  for (TargetPolicy p : {TargetPolicy::kNonPunctuation, TargetPolicy::kAllWords,
                         TargetPolicy::kContentWords}) {
    if (TargetPolicyName(p) == name) return p;
  }
  return std::nullopt;
}

bool IsPunctuationForm(std::string_view form) {
  if (form.empty()) return false;
  for (char c : form) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x80 || !std::ispunct(u)) return false;
  }
  return true;
}

std::vector<int> SelectTargets(const AttentionBundle& b, TargetPolicy policy) {
  std::vector<int> targets;
  for (int i = 0; i < b.word_count(); ++i) {
    const bool punct = IsPunctuationForm(b.word_forms[i]);
    switch (policy) {
      case TargetPolicy::kAllWords:
        targets.push_back(i);
        break;
      case TargetPolicy::kNonPunctuation:
        if (!punct) targets.push_back(i);
        break;
      case TargetPolicy::kContentWords:
        if (!punct && !b.function_flags[i]) targets.push_back(i);
        break;
    }
  }
  return targets;
}

HeadScore FunctionAttentionScore(const AttentionBundle& b, const WordAttention& m,
                                 int layer, int head, const std::vector<int>& targets) {
  if (targets.empty()) throw std::invalid_argument("empty target set");
  HeadScore s;
  s.layer = layer;
  s.head = head;
  s.n_targets = static_cast<int>(targets.size());
  for (int t : targets) {
    if (b.function_flags[PredictParent(m, layer, head, t)]) ++s.hits;
  }
  s.score = static_cast<double>(s.hits) / s.n_targets;
  return s;
}

DominanceResult DominantHeads(const std::vector<AttentionBundle>& bundles,
                              const ProbeOptions& options) {
  DominanceResult result;
  if (bundles.empty()) return result;
  result.layers = bundles.front().layers;
  result.heads = bundles.front().heads;
  const std::size_t cells = static_cast<std::size_t>(result.layers) * result.heads;
  for (const AttentionBundle& b : bundles) {
    RequireShape(b);
    if (b.layers != result.layers || b.heads != result.heads) {
      throw std::invalid_argument(Describe(b) + "layer/head counts differ from the run");
    }
  }

  struct PerBundle {
    std::vector<int> hits;
    int targets = 0;
  };
  std::vector<PerBundle> scored(bundles.size());
  ParallelFor(bundles.size(), options.jobs, [&](std::size_t k) {
    const AttentionBundle& b = bundles[k];
    PerBundle& out = scored[k];
    out.hits.assign(cells, 0);
    const std::vector<int> targets = SelectTargets(b, options.targets);
    out.targets = static_cast<int>(targets.size());
    if (targets.empty() || b.word_count() < 2) {
      out.targets = 0;
      return;
    }
    const WordAttention m = WordLevelAttention(b);
    for (int l = 0; l < result.layers; ++l) {
      for (int h = 0; h < result.heads; ++h) {
        out.hits[static_cast<std::size_t>(l) * result.heads + h] =
            FunctionAttentionScore(b, m, l, h, targets).hits;
      }
    }
  });

  // Members sorted by sentence id so sums do not depend on input order.
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < bundles.size(); ++k) {
    groups[bundles[k].subcategory].push_back(k);
  }
  result.histogram.assign(cells, 0);
  for (auto& [name, members] : groups) {
    std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
      return bundles[x].sentence_id != bundles[y].sentence_id
                 ? bundles[x].sentence_id < bundles[y].sentence_id
                 : x < y;
    });
    SubcategoryDominance d;
    d.subcategory = name;
    d.bundle_count = static_cast<int>(members.size());
    d.head_scores.assign(cells, 0.0);
    std::vector<long long> hits(cells, 0);
    int scored_bundles = 0;
    for (std::size_t k : members) {
      const PerBundle& p = scored[k];
      if (p.targets == 0) continue;
      d.target_count += p.targets;
      ++scored_bundles;
      for (std::size_t c = 0; c < cells; ++c) {
        hits[c] += p.hits[c];
        d.head_scores[c] += static_cast<double>(p.hits[c]) / p.targets;
      }
    }
    for (std::size_t c = 0; c < cells; ++c) {
      if (options.aggregation == Aggregation::kPooled) {
        d.head_scores[c] = d.target_count > 0
                               ? static_cast<double>(hits[c]) / d.target_count
                               : 0.0;
      } else {
        d.head_scores[c] = scored_bundles > 0 ? d.head_scores[c] / scored_bundles : 0.0;
      }
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < cells; ++c) {
      if (d.head_scores[c] > d.head_scores[best]) best = c;
    }
    d.layer = static_cast<int>(best) / result.heads;
    d.head = static_cast<int>(best) % result.heads;
    d.score = d.head_scores[best];
    ++result.histogram[best];
    result.subcategories.push_back(std::move(d));
  }
  return result;
}

std::string_view MaskModeName(MaskMode mode) {
  return mode == MaskMode::kMaskFunction ? "MaskFunction" : "None";
}

std::optional<MaskMode> ParseMaskMode(std::string_view name) {
  if (name == "MaskFunction") return MaskMode::kMaskFunction;
  if (name == "None") return MaskMode::kNone;
  return std::nullopt;
}

AblationMask BuildMask(const AttentionBundle& b, MaskMode mode) {
  AblationMask mask;
  mask.sentence_id = b.sentence_id;
  mask.mode = mode;
  if (mode == MaskMode::kNone) return mask;
  for (int s = 0; s < static_cast<int>(b.alignment.size()); ++s) {
    const int word = b.alignment[s];
    if (word >= 0 && word < static_cast<int>(b.function_flags.size()) &&
        b.function_flags[word]) {
      mask.positions.push_back(s);
    }
  }
  return mask;
}

}  // namespace funcword
