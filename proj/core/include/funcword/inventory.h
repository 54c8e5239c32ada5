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

#ifndef FUNCWORD_INVENTORY_H_
#define FUNCWORD_INVENTORY_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "funcword/treebank.h"
#include "funcword/upos.h"

namespace funcword {

// The five tags whose members are manipulated in the counterfactual corpora.
enum class FunctionCategory : std::uint8_t { kDet, kAdp, kCconj, kSconj, kAux };

inline constexpr std::array<FunctionCategory, 5> kAllFunctionCategories = {
    FunctionCategory::kDet, FunctionCategory::kAdp, FunctionCategory::kCconj,
    FunctionCategory::kSconj, FunctionCategory::kAux};

std::optional<FunctionCategory> CategoryForUpos(Upos tag);
Upos UposForCategory(FunctionCategory category);
std::string_view CategoryName(FunctionCategory category);
std::optional<FunctionCategory> ParseCategory(std::string_view name);

// Lowercases ASCII letters; other bytes (including UTF-8 sequences) pass
// through unchanged.
std::string LowercaseForm(std::string_view form);

class FunctionInventory {
 public:
  using Key = std::pair<std::string, FunctionCategory>;

  FunctionInventory() = default;
  FunctionInventory(std::map<Key, std::int64_t> entries, std::int64_t min_count,
                    std::vector<std::string> sources);

  // The 116-form English inventory (DET, ADP, CCONJ, SCONJ, AUX). It is a
  // curated list without corpus counts: every count is 0 and min_count is 0.
  static const FunctionInventory& English();

  bool Contains(std::string_view form, FunctionCategory category) const;
  std::vector<FunctionCategory> CategoriesOf(std::string_view form) const;

  // Sorted forms of one category.
  std::vector<std::string> Forms(FunctionCategory category) const;
  // Sorted distinct forms over all categories.
  std::vector<std::string> DistinctForms() const;

  std::size_t EntryCount() const { return entries_.size(); }
  const std::map<Key, std::int64_t>& entries() const { return entries_; }
  std::int64_t min_count() const { return min_count_; }
  const std::vector<std::string>& sources() const { return sources_; }

  bool operator==(const FunctionInventory&) const = default;

 private:
  std::map<Key, std::int64_t> entries_;
  std::int64_t min_count_ = 1;
  std::vector<std::string> sources_;
};

// Collects every (lowercased form, category) pair whose joint count across
// `treebanks` reaches `min_count`. Throws std::invalid_argument on an empty
// treebank list or min_count < 1.
FunctionInventory ExtractInventory(
    const std::vector<const Treebank*>& treebanks,
    const std::set<FunctionCategory>& categories, std::int64_t min_count);

// Manual corrections applied on top of an extracted inventory. Override file
// lines look like "+ form CATEGORY" or "- form CATEGORY"; '#' starts a
// comment.
struct InventoryOverrides {
  std::vector<FunctionInventory::Key> add;
  std::vector<FunctionInventory::Key> remove;
};

// Throws std::runtime_error with the line number on malformed input.
InventoryOverrides ParseOverrides(std::istream& in);
FunctionInventory ApplyOverrides(const FunctionInventory& inventory,
                                 const InventoryOverrides& overrides);

// Versioned JSON: {"version":1,"min_count":..,"sources":[..],
// "categories":{"DET":[{"form":"the","count":12}, ...], ...}}.
void WriteInventory(std::ostream& out, const FunctionInventory& inventory);
// Throws std::runtime_error on schema violations.
FunctionInventory ReadInventory(std::istream& in);

enum class WordClassKind : std::uint8_t { kFunction, kContent, kExcluded };

struct WordClass {
  WordClassKind kind = WordClassKind::kContent;
  Upos tag = Upos::kX;  // the token's tag; the category when kind is Function

  bool is_function() const { return kind == WordClassKind::kFunction; }
  bool operator==(const WordClass&) const = default;
};

enum class ClassifyMode : std::uint8_t {
  // UD closed-class tags minus NUM; used for the cross-linguistic statistics.
  kPosOnly,
  // One of the five categories and listed in the inventory; used for the
  // English corpus manipulations.
  kPosAndForm,
};

WordClass ClassifyToken(const Token& token, const FunctionInventory& inventory,
                        ClassifyMode mode);
WordClass ClassifyPosOnly(Upos tag);

}  // namespace funcword

#endif  // FUNCWORD_INVENTORY_H_
