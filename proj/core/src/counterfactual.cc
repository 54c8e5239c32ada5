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

#include "funcword/counterfactual.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "funcword/rng.h"

namespace funcword {
namespace {

constexpr std::array<std::string_view, 7> kConditionNames = {
    "Natural",   "NoFunction", "FiveFunction",  "MoreFunction",
    "BigramDep", "RandomDep",  "WithinBoundary"};

// Stream identifiers so that different conditions never share draws.
constexpr std::uint64_t kBigramStream = 0xB16A;
constexpr std::uint64_t kRandomDepStream = 0x5A4D;
constexpr std::uint64_t kMoreFunctionStream = 0x3F0E;
constexpr std::uint64_t kPseudowordStream = 0x9E0D;

// Copies the sentence's lowercased forms and records every function slot in
// place; used by the position-preserving conditions.
Rewrite InPlace(const Sentence& sentence, const std::vector<bool>& flags) {
  Rewrite r;
  r.words.reserve(sentence.size());
  for (const Token& t : sentence.tokens()) {
    r.words.push_back(LowercaseForm(t.form));
    if (flags[t.index - 1]) {
      r.original_positions.push_back(t.index);
      r.rewritten_positions.push_back(t.index);
    }
  }
  return r;
}

FunctionCategory CategoryOf(const Token& token) {
  // Only called on tokens already classified as function words.
  return *CategoryForUpos(token.upos);
}

}  // namespace

std::string_view ConditionName(Condition condition) {
  return kConditionNames[static_cast<int>(condition)];
}

std::optional<Condition> ParseCondition(std::string_view name) {
  for (std::size_t i = 0; i < kConditionNames.size(); ++i) {
    if (kConditionNames[i] == name) return static_cast<Condition>(i);
  }
  return std::nullopt;
}

bool RequiresParse(Condition condition) {
  return condition == Condition::kWithinBoundary;
}

Corpus CorpusFromTreebank(const Treebank& treebank) {
  return Corpus{treebank.sentences, true};
}

Corpus ReadTaggedText(std::istream& in) {
  Corpus corpus;
  corpus.parsed = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<Token> tokens;
    std::string item;
    while (fields >> item) {
      const std::size_t slash = item.rfind('/');
      if (slash == std::string::npos || slash == 0) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected form/UPOS, got '" + item + "'");
      }
      auto tag = ParseUpos(std::string_view(item).substr(slash + 1));
      if (!tag) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": unknown UPOS in '" + item + "'");
      }
      Token t;
      t.index = static_cast<int>(tokens.size()) + 1;
      t.form = item.substr(0, slash);
      t.upos = *tag;
      t.head = 0;
      tokens.push_back(std::move(t));
    }
    if (tokens.empty()) continue;
    corpus.sentences.emplace_back(std::move(tokens),
                                  "line-" + std::to_string(line_no));
  }
  return corpus;
}

std::vector<bool> FunctionFlags(const Sentence& sentence,
                                const FunctionInventory& inventory) {
  std::vector<bool> flags(sentence.size());
  for (const Token& t : sentence.tokens()) {
    flags[t.index - 1] =
        ClassifyToken(t, inventory, ClassifyMode::kPosAndForm).is_function();
  }
  return flags;
}

Rewrite RewriteNatural(const Sentence& sentence,
                       const FunctionInventory& inventory) {
  return InPlace(sentence, FunctionFlags(sentence, inventory));
}

Rewrite RewriteNoFunction(const Sentence& sentence,
                          const FunctionInventory& inventory) {
  const std::vector<bool> flags = FunctionFlags(sentence, inventory);
  Rewrite r;
  for (const Token& t : sentence.tokens()) {
    if (flags[t.index - 1]) {
      r.original_positions.push_back(t.index);
      r.rewritten_positions.push_back(0);
    } else {
      r.words.push_back(LowercaseForm(t.form));
    }
  }
  return r;
}

Rewrite RewriteFiveFunction(const Sentence& sentence,
                            const FunctionInventory& inventory,
                            const Representatives& representatives) {
  const std::vector<bool> flags = FunctionFlags(sentence, inventory);
  Rewrite r = InPlace(sentence, flags);
  for (int pos : r.original_positions) {
    const FunctionCategory category = CategoryOf(sentence.token(pos));
    auto it = representatives.find(category);
    if (it == representatives.end()) {
      throw std::invalid_argument("no representative for category " +
                                  std::string(CategoryName(category)));
    }
    r.words[pos - 1] = it->second;
  }
  return r;
}

Rewrite RewriteMoreFunction(const Sentence& sentence,
                            const FunctionInventory& inventory,
                            const PseudowordMap& pseudowords, std::uint64_t seed,
                            std::uint64_t sentence_key) {
  Rewrite r = InPlace(sentence, FunctionFlags(sentence, inventory));
  for (int pos : r.original_positions) {
    const std::vector<std::string>& choices = pseudowords.Lookup(r.words[pos - 1]);
    const std::uint64_t pick = KeyedBelow(
        seed, {kMoreFunctionStream, sentence_key, static_cast<std::uint64_t>(pos)},
        choices.size());
    r.words[pos - 1] = choices[pick];
  }
  return r;
}

const std::string& BigramMap::FunctionFor(std::string_view following) const {
  auto it = mapping.find(std::string(following));
  if (it != mapping.end()) return it->second;
  it = mapping.find(std::string(kUnknown));
  if (it == mapping.end()) {
    throw std::out_of_range("bigram map has no entry for '" +
                            std::string(following) + "' and no unknown entry");
  }
  return it->second;
}

BigramMap BigramMapFromPairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  BigramMap map;
  for (const auto& [following, function] : pairs) {
    if (!map.mapping.emplace(following, function).second ||
        !map.inverse.emplace(function, following).second) {
      throw std::invalid_argument("bigram pairs are not one-to-one at '" +
                                  following + "' -> '" + function + "'");
    }
  }
  return map;
}

BigramMap BuildBigramMap(const Corpus& corpus, const FunctionInventory& inventory,
                         std::uint64_t seed,
                         std::optional<std::size_t> vocab_cap) {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const Sentence& s : corpus.sentences) {
    for (const Token& t : s.tokens()) ++counts[LowercaseForm(t.form)];
  }
  counts.erase(std::string(BigramMap::kUnknown));
  std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(),
                                                           counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });

  std::vector<std::string> functions = inventory.DistinctForms();
  if (functions.empty()) {
    throw std::invalid_argument("bigram map needs a non-empty inventory");
  }
  Rng rng(MixSeed(seed, {kBigramStream}));
  rng.Shuffle(std::span<std::string>(functions));

  std::size_t dedicated = std::min(functions.size() - 1, ranked.size());
  if (vocab_cap) dedicated = std::min(dedicated, *vocab_cap);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < dedicated; ++i) {
    pairs.emplace_back(ranked[i].first, functions[i]);
  }
  pairs.emplace_back(std::string(BigramMap::kUnknown), functions[dedicated]);
  return BigramMapFromPairs(pairs);
}

Rewrite RewriteBigramDep(const Sentence& sentence,
                         const FunctionInventory& inventory,
                         const BigramMap& bigram) {
  Rewrite r = InPlace(sentence, FunctionFlags(sentence, inventory));
  for (int pos : r.original_positions) {
    const std::string following =
        pos < sentence.size() ? LowercaseForm(sentence.token(pos + 1).form)
                              : std::string(BigramMap::kUnknown);
    r.words[pos - 1] = bigram.FunctionFor(following);
  }
  return r;
}

std::vector<Rewrite> DealFunctionForms(const std::vector<Sentence>& sentences,
                                       const FunctionInventory& inventory,
                                       const std::vector<std::string>& forms) {
  std::vector<Rewrite> out;
  out.reserve(sentences.size());
  std::size_t next = 0;
  for (const Sentence& s : sentences) {
    Rewrite r = InPlace(s, FunctionFlags(s, inventory));
    for (int pos : r.original_positions) {
      if (next >= forms.size()) {
        throw std::invalid_argument("fewer dealt forms than function slots");
      }
      r.words[pos - 1] = forms[next++];
    }
    out.push_back(std::move(r));
  }
  if (next != forms.size()) {
    throw std::invalid_argument("more dealt forms than function slots");
  }
  return out;
}

std::vector<Rewrite> RewriteRandomDep(const std::vector<Sentence>& sentences,
                                      const FunctionInventory& inventory,
                                      std::uint64_t seed) {
  std::vector<std::string> forms;
  for (const Sentence& s : sentences) {
    const std::vector<bool> flags = FunctionFlags(s, inventory);
    for (const Token& t : s.tokens()) {
      if (flags[t.index - 1]) forms.push_back(LowercaseForm(t.form));
    }
  }
  Rng rng(MixSeed(seed, {kRandomDepStream}));
  rng.Shuffle(std::span<std::string>(forms));
  return DealFunctionForms(sentences, inventory, forms);
}

Rewrite RewriteWithinBoundary(const Sentence& sentence,
                              const FunctionInventory& inventory) {
  const std::vector<bool> flags = FunctionFlags(sentence, inventory);
  auto is_attached = [&](int i) {
    return flags[i - 1] && sentence.token(i).head != 0;
  };

  std::vector<int> order;
  order.reserve(sentence.size());
  // Emits `index` with its attached function dependents gathered around it.
  auto expand = [&](auto&& self, int index) -> void {
    std::vector<int> left, right;
    for (int dep : sentence.dependents(index)) {
      if (!is_attached(dep)) continue;
      (dep < index ? left : right).push_back(dep);
    }
    for (auto it = left.rbegin(); it != left.rend(); ++it) self(self, *it);
    order.push_back(index);
    for (auto it = right.rbegin(); it != right.rend(); ++it) self(self, *it);
  };
  for (const Token& t : sentence.tokens()) {
    if (!is_attached(t.index)) expand(expand, t.index);
  }

  std::vector<int> new_position(sentence.size() + 1, 0);
  Rewrite r;
  r.words.reserve(order.size());
  for (int i : order) {
    r.words.push_back(LowercaseForm(sentence.token(i).form));
    new_position[i] = static_cast<int>(r.words.size());
  }
  for (const Token& t : sentence.tokens()) {
    if (!flags[t.index - 1]) continue;
    r.original_positions.push_back(t.index);
    r.rewritten_positions.push_back(new_position[t.index]);
  }
  return r;
}

Representatives MostFrequentRepresentatives(const Corpus& corpus,
                                            const FunctionInventory& inventory) {
  std::map<std::pair<FunctionCategory, std::string>, std::int64_t> counts;
  for (const Sentence& s : corpus.sentences) {
    const std::vector<bool> flags = FunctionFlags(s, inventory);
    for (const Token& t : s.tokens()) {
      if (flags[t.index - 1]) ++counts[{CategoryOf(t), LowercaseForm(t.form)}];
    }
  }
  Representatives reps;
  std::map<FunctionCategory, std::int64_t> best;
  // Map iteration is sorted by form, so a strict comparison keeps the
  // alphabetically first form among ties.
  for (const auto& [key, n] : counts) {
    auto it = best.find(key.first);
    if (it == best.end() || n > it->second) {
      best[key.first] = n;
      reps[key.first] = key.second;
    }
  }
  return reps;
}

ConditionTables PrepareTables(const Corpus& corpus, const ConditionSpec& spec,
                              const FunctionInventory& inventory,
                              const PseudowordGenerator& generator) {
  ConditionTables tables;
  switch (spec.condition) {
    case Condition::kFiveFunction: {
      tables.representatives = MostFrequentRepresentatives(corpus, inventory);
      for (const auto& [category, form] : spec.representatives) {
        tables.representatives[category] = LowercaseForm(form);
      }
      break;
    }
    case Condition::kMoreFunction: {
      if (spec.fan_out < 1) throw std::invalid_argument("fan-out must be >= 1");
      std::unordered_set<std::string> vocabulary;
      for (const Sentence& s : corpus.sentences) {
        for (const Token& t : s.tokens()) vocabulary.insert(LowercaseForm(t.form));
      }
      tables.pseudowords =
          BuildPseudowordMap(inventory.DistinctForms(), spec.fan_out, vocabulary,
                             generator, MixSeed(spec.seed, {kPseudowordStream}));
      break;
    }
    case Condition::kBigramDep:
      tables.bigram =
          BuildBigramMap(corpus, inventory, spec.seed, spec.bigram_vocab_cap);
      break;
    default:
      break;
  }
  return tables;
}

void WriteConditionTables(std::ostream& out, const ConditionTables& tables) {
  nlohmann::json root = {{"version", 1}};
  if (!tables.representatives.empty()) {
    nlohmann::json reps = nlohmann::json::object();
    for (const auto& [category, form] : tables.representatives) {
      reps[std::string(CategoryName(category))] = form;
    }
    root["representatives"] = reps;
  }
  if (!tables.pseudowords.mapping.empty()) {
    root["pseudowords"] = {{"generator", tables.pseudowords.generator_id},
                           {"fan_out", tables.pseudowords.fan_out},
                           {"mapping", tables.pseudowords.mapping}};
  }
  if (!tables.bigram.mapping.empty()) {
    root["bigram"] = {{"mapping", tables.bigram.mapping}};
  }
  out << root.dump(1) << '\n';
}

ConditionTables ReadConditionTables(std::istream& in) {
  ConditionTables tables;
  try {
    const nlohmann::json root = nlohmann::json::parse(in);
    if (root.value("version", 0) != 1) {
      throw std::runtime_error("condition tables: unsupported version");
    }
    if (auto it = root.find("representatives"); it != root.end()) {
      for (const auto& [name, form] : it->items()) {
        auto category = ParseCategory(name);
        if (!category) {
          throw std::runtime_error("condition tables: unknown category " + name);
        }
        tables.representatives[*category] = form.get<std::string>();
      }
    }
    if (auto it = root.find("pseudowords"); it != root.end()) {
      tables.pseudowords.generator_id = it->at("generator").get<std::string>();
      tables.pseudowords.fan_out = it->at("fan_out").get<int>();
      tables.pseudowords.mapping =
          it->at("mapping").get<std::map<std::string, std::vector<std::string>>>();
    }
    if (auto it = root.find("bigram"); it != root.end()) {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& [following, function] :
           it->at("mapping").get<std::map<std::string, std::string>>()) {
        pairs.emplace_back(following, function);
      }
      tables.bigram = BigramMapFromPairs(pairs);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("condition tables: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("condition tables: ") + e.what());
  }
  return tables;
}

void MergeTables(const ConditionTables& from, ConditionTables* into) {
  if (!from.representatives.empty()) into->representatives = from.representatives;
  if (!from.pseudowords.mapping.empty()) into->pseudowords = from.pseudowords;
  if (!from.bigram.mapping.empty()) into->bigram = from.bigram;
}

ConditionResult ApplyCondition(const Corpus& corpus, const ConditionSpec& spec,
                               const FunctionInventory& inventory,
                               const ConditionTables& tables,
                               const std::vector<std::uint64_t>* sentence_keys) {
  if (RequiresParse(spec.condition) && !corpus.parsed) {
    throw std::invalid_argument(std::string(ConditionName(spec.condition)) +
                                " needs a dependency-parsed corpus");
  }
  if (sentence_keys && sentence_keys->size() != corpus.sentences.size()) {
    throw std::invalid_argument("one MoreFunction key per sentence is required");
  }

  const std::size_t n = corpus.sentences.size();
  std::vector<Rewrite> rewrites;
  rewrites.reserve(n);
  if (spec.condition == Condition::kRandomDep) {
    rewrites = RewriteRandomDep(corpus.sentences, inventory, spec.seed);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const Sentence& s = corpus.sentences[i];
      switch (spec.condition) {
        case Condition::kNatural:
          rewrites.push_back(RewriteNatural(s, inventory));
          break;
        case Condition::kNoFunction:
          rewrites.push_back(RewriteNoFunction(s, inventory));
          break;
        case Condition::kFiveFunction:
          rewrites.push_back(RewriteFiveFunction(s, inventory, tables.representatives));
          break;
        case Condition::kMoreFunction:
          rewrites.push_back(RewriteMoreFunction(
              s, inventory, tables.pseudowords, spec.seed,
              sentence_keys ? (*sentence_keys)[i] : static_cast<std::uint64_t>(i)));
          break;
        case Condition::kBigramDep:
          rewrites.push_back(RewriteBigramDep(s, inventory, tables.bigram));
          break;
        case Condition::kWithinBoundary:
          rewrites.push_back(RewriteWithinBoundary(s, inventory));
          break;
        case Condition::kRandomDep:
          break;
      }
    }
  }

  ConditionResult result;
  ConditionSummary& sum = result.summary;
  sum.condition = spec.condition;
  sum.seed = spec.seed;
  sum.sentence_count = static_cast<std::int64_t>(n);
  std::set<std::string> types;
  result.sentences.reserve(n);
  result.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Sentence& s = corpus.sentences[i];
    Rewrite& r = rewrites[i];
    sum.original_token_total += s.size();
    sum.token_total += static_cast<std::int64_t>(r.words.size());
    sum.original_function_token_count +=
        static_cast<std::int64_t>(r.original_positions.size());

    bool affected = false;
    bool moved = false;
    for (std::size_t k = 0; k < r.original_positions.size(); ++k) {
      const int from = r.original_positions[k];
      const int to = r.rewritten_positions[k];
      if (to == 0) {
        ++sum.tokens_changed;
        affected = true;
        continue;
      }
      ++sum.function_token_count;
      const std::string& out = r.words[to - 1];
      types.insert(out);
      const bool position_changed = from != to;
      if (position_changed) {
        ++sum.function_positions_changed;
        moved = true;
      }
      if (position_changed || out != LowercaseForm(s.token(from).form)) {
        ++sum.tokens_changed;
        affected = true;
      }
    }
    sum.sentences_affected += affected;
    sum.sentences_with_moved_function_words += moved;
    const bool emptied = r.words.empty();
    sum.emptied_sentences += emptied;

    RewriteRecord rec;
    rec.sentence_index = i;
    rec.sentence_id = s.sent_id();
    rec.condition = spec.condition;
    rec.original_positions = std::move(r.original_positions);
    rec.rewritten_positions = std::move(r.rewritten_positions);
    rec.emptied = emptied;
    result.records.push_back(std::move(rec));
    result.sentences.push_back(std::move(r.words));
  }
  sum.content_token_count = sum.token_total - sum.function_token_count;
  sum.function_type_count = static_cast<std::int64_t>(types.size());
  sum.function_types.assign(types.begin(), types.end());
  if (sum.original_function_token_count > 0) {
    sum.position_change_ratio =
        static_cast<double>(sum.function_positions_changed) /
        static_cast<double>(sum.original_function_token_count);
  }
  if (sum.sentence_count > 0) {
    sum.affected_sentence_ratio = static_cast<double>(sum.sentences_affected) /
                                  static_cast<double>(sum.sentence_count);
  }
  return result;
}

ConditionResult ApplyCondition(const Corpus& corpus, const ConditionSpec& spec,
                               const FunctionInventory& inventory) {
  const SyllableSubstitutionGenerator generator;
  return ApplyCondition(corpus, spec, inventory,
                        PrepareTables(corpus, spec, inventory, generator));
}

std::string JoinWords(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace funcword
