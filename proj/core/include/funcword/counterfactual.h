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

#ifndef FUNCWORD_COUNTERFACTUAL_H_
#define FUNCWORD_COUNTERFACTUAL_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "funcword/inventory.h"
#include "funcword/pseudoword.h"
#include "funcword/treebank.h"

namespace funcword {

enum class Condition : std::uint8_t {
  kNatural,
  kNoFunction,
  kFiveFunction,
  kMoreFunction,
  kBigramDep,
  kRandomDep,
  kWithinBoundary,
};

inline constexpr std::array<Condition, 7> kAllConditions = {
    Condition::kNatural,   Condition::kNoFunction, Condition::kFiveFunction,
    Condition::kMoreFunction, Condition::kBigramDep, Condition::kRandomDep,
    Condition::kWithinBoundary};

std::string_view ConditionName(Condition condition);
std::optional<Condition> ParseCondition(std::string_view name);
// Only WithinBoundary needs dependency heads; the others need tags only.
bool RequiresParse(Condition condition);

using Representatives = std::map<FunctionCategory, std::string>;

struct ConditionSpec {
  Condition condition = Condition::kNatural;
  std::uint64_t seed = 0;
  // FiveFunction. Categories left out default to the corpus's most frequent
  // inventory form of that category.
  Representatives representatives;
  // MoreFunction: pseudowords per function form.
  int fan_out = 10;
  // BigramDep: at most this many following-word types get a dedicated
  // function word (never more than K-1).
  std::optional<std::size_t> bigram_vocab_cap;
};

// Sentences to rewrite. `parsed` is false for tagged text whose heads are
// unknown (every token is then its own root).
struct Corpus {
  std::vector<Sentence> sentences;
  bool parsed = true;
};

Corpus CorpusFromTreebank(const Treebank& treebank);

// One sentence per line of whitespace-separated "form/UPOS" tokens; the
// last '/' splits form from tag. Blank lines are skipped. Throws
// std::runtime_error with the line number on an unknown tag.
Corpus ReadTaggedText(std::istream& in);

// A rewritten sentence plus where each function token went. Positions are
// 1-based; a rewritten position of 0 means the token was deleted.
struct Rewrite {
  std::vector<std::string> words;
  std::vector<int> original_positions;
  std::vector<int> rewritten_positions;
};

// Function-word flags (PosAndForm classification), indexed by position-1.
std::vector<bool> FunctionFlags(const Sentence& sentence,
                                const FunctionInventory& inventory);

Rewrite RewriteNatural(const Sentence& sentence, const FunctionInventory& inventory);

Rewrite RewriteNoFunction(const Sentence& sentence,
                          const FunctionInventory& inventory);

// Throws std::invalid_argument if a function token's category has no
// representative.
Rewrite RewriteFiveFunction(const Sentence& sentence,
                            const FunctionInventory& inventory,
                            const Representatives& representatives);

// Each function token becomes one of its form's pseudowords, chosen by a
// stream keyed on (seed, sentence_key, position). Throws std::out_of_range
// for an unmapped form.
Rewrite RewriteMoreFunction(const Sentence& sentence,
                            const FunctionInventory& inventory,
                            const PseudowordMap& pseudowords, std::uint64_t seed,
                            std::uint64_t sentence_key);

// Bijection between K function forms and the K-1 most frequent following
// forms plus an unknown sentinel.
struct BigramMap {
  static constexpr std::string_view kUnknown = "<unk>";

  std::map<std::string, std::string> mapping;  // following form -> function form
  std::map<std::string, std::string> inverse;  // function form -> following form

  // Falls back to the unknown entry; throws std::out_of_range if that is
  // also missing.
  const std::string& FunctionFor(std::string_view following) const;
};

// Builds a map from explicit (following form, function form) pairs. Throws
// std::invalid_argument unless the pairs are one-to-one.
BigramMap BigramMapFromPairs(
    const std::vector<std::pair<std::string, std::string>>& pairs);

// Ranks lowercased token forms by corpus frequency (ties by form), pairs
// rank i with the i-th function form of a seeded shuffle of the inventory's
// distinct forms, and routes everything else through the unknown sentinel.
BigramMap BuildBigramMap(const Corpus& corpus, const FunctionInventory& inventory,
                         std::uint64_t seed,
                         std::optional<std::size_t> vocab_cap = std::nullopt);

// Each function token is replaced by the function word mapped from the next
// token of the original sentence (the unknown entry when sentence-final).
Rewrite RewriteBigramDep(const Sentence& sentence,
                         const FunctionInventory& inventory,
                         const BigramMap& bigram);

// Permutes the corpus-wide multiset of function forms with a seeded shuffle
// and deals it back into the original function slots.
std::vector<Rewrite> RewriteRandomDep(const std::vector<Sentence>& sentences,
                                      const FunctionInventory& inventory,
                                      std::uint64_t seed);

// Deals `forms` into the function slots of `sentences` in corpus order.
// Throws std::invalid_argument if the slot count differs from forms.size().
std::vector<Rewrite> DealFunctionForms(const std::vector<Sentence>& sentences,
                                       const FunctionInventory& inventory,
                                       const std::vector<std::string>& forms);

// Moves every function token next to its head, on its original side. Same
// side siblings end up in reverse linear order, so the one originally
// farthest from the head sits closest to it.
Rewrite RewriteWithinBoundary(const Sentence& sentence,
                              const FunctionInventory& inventory);

// Corpus-global lookup tables shared by the per-sentence rewrites. Built
// once from the training corpus and reused for evaluation suites.
struct ConditionTables {
  Representatives representatives;
  PseudowordMap pseudowords;
  BigramMap bigram;
};

// JSON: {"version":1,"representatives":{"DET":"the",..},
// "pseudowords":{"generator":..,"fan_out":..,"mapping":{form:[..]}},
// "bigram":{"mapping":{following:function}}}. Empty tables are omitted.
void WriteConditionTables(std::ostream& out, const ConditionTables& tables);
// Throws std::runtime_error on schema violations.
ConditionTables ReadConditionTables(std::istream& in);

// Merges the non-empty tables of `from` into `into`.
void MergeTables(const ConditionTables& from, ConditionTables* into);

Representatives MostFrequentRepresentatives(const Corpus& corpus,
                                            const FunctionInventory& inventory);

// Fills only the table the spec's condition needs.
ConditionTables PrepareTables(const Corpus& corpus, const ConditionSpec& spec,
                              const FunctionInventory& inventory,
                              const PseudowordGenerator& generator);

struct RewriteRecord {
  std::size_t sentence_index = 0;
  std::string sentence_id;
  Condition condition = Condition::kNatural;
  std::vector<int> original_positions;
  std::vector<int> rewritten_positions;
  bool emptied = false;
};

struct ConditionSummary {
  Condition condition = Condition::kNatural;
  std::uint64_t seed = 0;
  std::int64_t sentence_count = 0;
  std::int64_t original_token_total = 0;
  std::int64_t token_total = 0;
  std::int64_t original_function_token_count = 0;
  std::int64_t function_token_count = 0;
  std::int64_t function_type_count = 0;
  std::int64_t content_token_count = 0;
  // Function tokens whose form or position changed, or that were deleted.
  std::int64_t tokens_changed = 0;
  std::int64_t function_positions_changed = 0;
  std::int64_t sentences_affected = 0;
  std::int64_t sentences_with_moved_function_words = 0;
  std::int64_t emptied_sentences = 0;
  double position_change_ratio = 0.0;   // positions changed / function tokens
  double affected_sentence_ratio = 0.0;  // affected / sentences
  std::vector<std::string> function_types;
};

struct ConditionResult {
  std::vector<std::vector<std::string>> sentences;
  std::vector<RewriteRecord> records;
  ConditionSummary summary;
};

// Dispatches one condition over the corpus. `sentence_keys`, when given,
// replaces the sentence ordinal as the MoreFunction stream key (one key per
// sentence). Throws std::invalid_argument when the condition needs parses
// the corpus does not have.
ConditionResult ApplyCondition(const Corpus& corpus, const ConditionSpec& spec,
                               const FunctionInventory& inventory,
                               const ConditionTables& tables,
                               const std::vector<std::uint64_t>* sentence_keys = nullptr);

// Convenience overload that prepares tables with the built-in generator.
ConditionResult ApplyCondition(const Corpus& corpus, const ConditionSpec& spec,
                               const FunctionInventory& inventory);

std::string JoinWords(const std::vector<std::string>& words);

}  // namespace funcword

#endif  // FUNCWORD_COUNTERFACTUAL_H_
