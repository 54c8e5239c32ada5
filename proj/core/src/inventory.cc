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

#include "funcword/inventory.h"

#include <algorithm>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace funcword {
namespace {

constexpr std::array<std::string_view, 5> kCategoryNames = {"DET", "ADP", "CCONJ",
                                                            "SCONJ", "AUX"};

// Appendix-style listing of the curated English inventory.
const char* const kEnglishDet[] = {
    "the", "this", "a", "an", "no", "all", "another", "each", "that", "any",
    "those", "these", "both", "every", "either", "neither"};
const char* const kEnglishCconj[] = {"and", "but", "or", "yet"};
const char* const kEnglishSconj[] = {
    "that", "if", "although", "after", "whereas", "while", "before", "as",
    "though", "until", "because", "since", "once", "whether", "unless",
    "albeit", "till", "whilst"};
const char* const kEnglishAux[] = {
    "will", "be", "had", "were", "being", "is", "would", "was", "do", "could",
    "are", "have", "been", "has", "did", "should", "might", "can", "does",
    "'s", "may", "must", "ca", "am", "shall", "art", "ar", "re",
    "ought", "need"};
const char* const kEnglishAdp[] = {
    "at", "in", "of", "near", "for", "by", "to", "with", "on", "from",
    "behind", "into", "within", "despite", "against", "as", "over", "than",
    "during", "about", "between", "among", "except", "through", "around",
    "after", "like", "off", "without", "under", "before", "throughout",
    "unlike", "across", "toward", "along", "above", "aboard", "until", "upon",
    "via", "beneath", "unto", "beyond", "per", "below", "amongst", "till",
    "beside", "amid", "onto", "towards", "underneath", "alongside"};

template <std::size_t N>
void AddAll(const char* const (&forms)[N], FunctionCategory category,
            std::map<FunctionInventory::Key, std::int64_t>* entries) {
  for (const char* form : forms) entries->emplace(std::make_pair(form, category), 0);
}

}  // namespace

std::optional<FunctionCategory> CategoryForUpos(Upos tag) {
  switch (tag) {
    case Upos::kDet:
      return FunctionCategory::kDet;
    case Upos::kAdp:
      return FunctionCategory::kAdp;
    case Upos::kCconj:
      return FunctionCategory::kCconj;
    case Upos::kSconj:
      return FunctionCategory::kSconj;
    case Upos::kAux:
      return FunctionCategory::kAux;
    default:
      return std::nullopt;
  }
}

Upos UposForCategory(FunctionCategory category) {
  switch (category) {
    case FunctionCategory::kDet:
      return Upos::kDet;
    case FunctionCategory::kAdp:
      return Upos::kAdp;
    case FunctionCategory::kCconj:
      return Upos::kCconj;
    case FunctionCategory::kSconj:
      return Upos::kSconj;
    case FunctionCategory::kAux:
      return Upos::kAux;
  }
  return Upos::kX;
}

std::string_view CategoryName(FunctionCategory category) {
  return kCategoryNames[static_cast<int>(category)];
}

std::optional<FunctionCategory> ParseCategory(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<FunctionCategory>(i);
  }
  return std::nullopt;
}

std::string LowercaseForm(std::string_view form) {
  std::string out(form);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

FunctionInventory::FunctionInventory(std::map<Key, std::int64_t> entries,
                                     std::int64_t min_count,
                                     std::vector<std::string> sources)
    : entries_(std::move(entries)),
      min_count_(min_count),
      sources_(std::move(sources)) {
  for (const auto& [key, count] : entries_) {
    if (key.first != LowercaseForm(key.first)) {
      throw std::invalid_argument("inventory form '" + key.first +
                                  "' is not lowercase");
    }
    if (count < min_count_) {
      throw std::invalid_argument("inventory entry '" + key.first +
                                  "' is below min_count");
    }
  }
}

const FunctionInventory& FunctionInventory::English() {
  static const FunctionInventory* const kEnglish = [] {
    std::map<Key, std::int64_t> entries;
    AddAll(kEnglishDet, FunctionCategory::kDet, &entries);
    AddAll(kEnglishCconj, FunctionCategory::kCconj, &entries);
    AddAll(kEnglishSconj, FunctionCategory::kSconj, &entries);
    AddAll(kEnglishAux, FunctionCategory::kAux, &entries);
    AddAll(kEnglishAdp, FunctionCategory::kAdp, &entries);
    return new FunctionInventory(std::move(entries), 0, {"builtin:english"});
  }();
  return *kEnglish;
}

bool FunctionInventory::Contains(std::string_view form,
                                 FunctionCategory category) const {
  return entries_.count(std::make_pair(LowercaseForm(form), category)) > 0;
}

std::vector<FunctionCategory> FunctionInventory::CategoriesOf(
    std::string_view form) const {
  std::vector<FunctionCategory> out;
  const std::string lower = LowercaseForm(form);
  for (FunctionCategory c : kAllFunctionCategories) {
    if (entries_.count(std::make_pair(lower, c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string> FunctionInventory::Forms(
    FunctionCategory category) const {
  std::vector<std::string> out;
  for (const auto& [key, count] : entries_) {
    if (key.second == category) out.push_back(key.first);
  }
  return out;  // map order is already sorted by form
}

std::vector<std::string> FunctionInventory::DistinctForms() const {
  std::set<std::string> forms;
  for (const auto& [key, count] : entries_) forms.insert(key.first);
  return {forms.begin(), forms.end()};
}

FunctionInventory ExtractInventory(
    const std::vector<const Treebank*>& treebanks,
    const std::set<FunctionCategory>& categories, std::int64_t min_count) {
  if (treebanks.empty()) {
    throw std::invalid_argument("inventory extraction needs at least one treebank");
  }
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");

  std::map<FunctionInventory::Key, std::int64_t> counts;
  std::vector<std::string> sources;
  for (const Treebank* tb : treebanks) {
    sources.push_back(tb->source_path.empty() ? tb->language_code
                                              : tb->source_path);
    for (const Sentence& s : tb->sentences) {
      for (const Token& t : s.tokens()) {
        auto category = CategoryForUpos(t.upos);
        if (!category || !categories.count(*category)) continue;
        ++counts[{LowercaseForm(t.form), *category}];
      }
    }
  }
  std::erase_if(counts, [&](const auto& kv) { return kv.second < min_count; });
  return FunctionInventory(std::move(counts), min_count, std::move(sources));
}

InventoryOverrides ParseOverrides(std::istream& in) {
  InventoryOverrides overrides;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string op, form, category_name, extra;
    if (!(fields >> op)) continue;
    if (!(fields >> form >> category_name) || (fields >> extra) ||
        (op != "+" && op != "-")) {
      throw std::runtime_error("override line " + std::to_string(line_no) +
                               ": expected '+|- form CATEGORY'");
    }
    auto category = ParseCategory(category_name);
    if (!category) {
      throw std::runtime_error("override line " + std::to_string(line_no) +
                               ": unknown category '" + category_name + "'");
    }
    auto& target = op == "+" ? overrides.add : overrides.remove;
    target.emplace_back(LowercaseForm(form), *category);
  }
  return overrides;
}

FunctionInventory ApplyOverrides(const FunctionInventory& inventory,
                                 const InventoryOverrides& overrides) {
  auto entries = inventory.entries();
  for (const auto& key : overrides.remove) entries.erase(key);
  // Manually added items carry no corpus evidence; they are recorded at the
  // threshold so the count invariant holds.
  for (const auto& key : overrides.add) {
    entries.try_emplace(key, inventory.min_count());
  }
  auto sources = inventory.sources();
  sources.push_back("overrides");
  return FunctionInventory(std::move(entries), inventory.min_count(),
                           std::move(sources));
}

void WriteInventory(std::ostream& out, const FunctionInventory& inventory) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["min_count"] = inventory.min_count();
  doc["sources"] = inventory.sources();
  nlohmann::ordered_json categories = nlohmann::ordered_json::object();
  for (FunctionCategory c : kAllFunctionCategories) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [key, count] : inventory.entries()) {
      if (key.second != c) continue;
      list.push_back({{"form", key.first}, {"count", count}});
    }
    categories[std::string(CategoryName(c))] = std::move(list);
  }
  doc["categories"] = std::move(categories);
  out << doc.dump(2) << '\n';
}

FunctionInventory ReadInventory(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.at("version").get<int>() != 1) {
      throw std::runtime_error("unsupported inventory version");
    }
    std::map<FunctionInventory::Key, std::int64_t> entries;
    for (const auto& [name, list] : doc.at("categories").items()) {
      auto category = ParseCategory(name);
      if (!category) throw std::runtime_error("unknown category " + name);
      for (const auto& item : list) {
        entries[{item.at("form").get<std::string>(), *category}] =
            item.at("count").get<std::int64_t>();
      }
    }
    return FunctionInventory(std::move(entries),
                             doc.at("min_count").get<std::int64_t>(),
                             doc.at("sources").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed inventory: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed inventory: ") + e.what());
  }
}

WordClass ClassifyPosOnly(Upos tag) {
  if (IsNonLinguistic(tag)) return {WordClassKind::kExcluded, tag};
  if (IsClosedClass(tag)) return {WordClassKind::kFunction, tag};
  return {WordClassKind::kContent, tag};
}

WordClass ClassifyToken(const Token& token, const FunctionInventory& inventory,
                        ClassifyMode mode) {
  if (IsNonLinguistic(token.upos)) return {WordClassKind::kExcluded, token.upos};
  if (mode == ClassifyMode::kPosOnly) return ClassifyPosOnly(token.upos);
  auto category = CategoryForUpos(token.upos);
  if (category && inventory.Contains(token.form, *category)) {
    return {WordClassKind::kFunction, token.upos};
  }
  return {WordClassKind::kContent, token.upos};
}

}  // namespace funcword
