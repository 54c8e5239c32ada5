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

#include <gtest/gtest.h>

#include <sstream>

#include "funcword/inventory.h"
#include "test_util.h"

namespace funcword {
namespace {

using testing::ParseSpec;

Treebank BankOf(std::vector<Sentence> sentences) {
  Treebank b;
  b.language_code = "en";
  b.sentences = std::move(sentences);
  return b;
}

TEST(InventoryTest, EnglishListHas116FormsIn122Pairs) {
  const FunctionInventory& en = FunctionInventory::English();
  EXPECT_EQ(en.DistinctForms().size(), 116u);
  EXPECT_EQ(en.EntryCount(), 122u);
  std::size_t total = 0;
  for (FunctionCategory c : kAllFunctionCategories) total += en.Forms(c).size();
  EXPECT_EQ(total, 122u);
}

TEST(InventoryTest, EnglishDeterminersMatchPublishedList) {
  const std::vector<std::string> expected = {
      "a",    "all",  "an",    "another", "any",  "both",  "each",  "either",
      "every", "neither", "no", "that",   "the",  "these", "this",  "those"};
  EXPECT_EQ(FunctionInventory::English().Forms(FunctionCategory::kDet), expected);
}

TEST(InventoryTest, AmbiguousFormsKeepEveryCategory) {
  const FunctionInventory& en = FunctionInventory::English();
  EXPECT_TRUE(en.Contains("that", FunctionCategory::kDet));
  EXPECT_TRUE(en.Contains("that", FunctionCategory::kSconj));
  EXPECT_TRUE(en.Contains("till", FunctionCategory::kSconj));
  EXPECT_TRUE(en.Contains("till", FunctionCategory::kAdp));
  for (const char* clitic : {"'s", "ca", "re", "ar", "art"}) {
    EXPECT_FALSE(en.CategoriesOf(clitic).empty()) << clitic;
  }
}

TEST(InventoryTest, EnglishListHasNoPronounsQuantifiersOrNumerals) {
  const FunctionInventory& en = FunctionInventory::English();
  for (const char* w : {"he", "they", "it", "many", "few", "several", "three", "one"}) {
    EXPECT_TRUE(en.CategoriesOf(w).empty()) << w;
  }
}

TEST(InventoryTest, ExtractSingleDeterminer) {
  const Treebank bank = BankOf({ParseSpec("the/DET/2 dog/NOUN/0")});
  const FunctionInventory inv =
      ExtractInventory({&bank}, {kAllFunctionCategories.begin(), kAllFunctionCategories.end()}, 1);
  ASSERT_EQ(inv.EntryCount(), 1u);
  EXPECT_EQ(inv.entries().begin()->first,
            (FunctionInventory::Key{"the", FunctionCategory::kDet}));
  EXPECT_EQ(inv.entries().begin()->second, 1);
}

TEST(InventoryTest, ExtractAppliesThresholdAndLowercases) {
  std::vector<Sentence> sentences;
  for (int i = 0; i < 9; ++i) sentences.push_back(ParseSpec("thou/PRON/2 wilt/AUX/3 go/VERB/0"));
  for (int i = 0; i < 10; ++i) sentences.push_back(ParseSpec("The/DET/2 cat/NOUN/0"));
  const Treebank bank = BankOf(sentences);
  const std::set<FunctionCategory> all(kAllFunctionCategories.begin(),
                                       kAllFunctionCategories.end());
  const FunctionInventory inv = ExtractInventory({&bank}, all, 10);
  EXPECT_FALSE(inv.Contains("wilt", FunctionCategory::kAux));
  EXPECT_TRUE(inv.Contains("the", FunctionCategory::kDet));
  EXPECT_EQ(inv.EntryCount(), 1u);
}

TEST(InventoryTest, ExtractErrors) {
  EXPECT_THROW(ExtractInventory({}, {FunctionCategory::kDet}, 1), std::invalid_argument);
  const Treebank bank = BankOf({ParseSpec("the/DET/2 dog/NOUN/0")});
  EXPECT_THROW(ExtractInventory({&bank}, {FunctionCategory::kDet}, 0), std::invalid_argument);
}

TEST(InventoryTest, ExtractionIsMonotoneInMinCount) {
  const Treebank bank = BankOf(testing::RandomSentences(3, 300));
  const std::set<FunctionCategory> all(kAllFunctionCategories.begin(),
                                       kAllFunctionCategories.end());
  FunctionInventory previous = ExtractInventory({&bank}, all, 1);
  for (int m = 2; m <= 60; m += 3) {
    const FunctionInventory next = ExtractInventory({&bank}, all, m);
    for (const auto& [key, count] : next.entries()) {
      EXPECT_TRUE(previous.entries().count(key));
      EXPECT_GE(count, m);
    }
    previous = next;
  }
}

TEST(InventoryTest, OverridesAddAndRemove) {
  std::istringstream in("# fix\n+ wilt AUX\n- the DET\n\n");
  const InventoryOverrides o = ParseOverrides(in);
  const FunctionInventory base({{{"the", FunctionCategory::kDet}, 20}}, 10, {"x"});
  const FunctionInventory fixed = ApplyOverrides(base, o);
  EXPECT_FALSE(fixed.Contains("the", FunctionCategory::kDet));
  EXPECT_TRUE(fixed.Contains("wilt", FunctionCategory::kAux));
  std::istringstream bad("+ wilt\n");
  EXPECT_THROW(ParseOverrides(bad), std::runtime_error);
  std::istringstream bad_cat("* the DET\n");
  EXPECT_THROW(ParseOverrides(bad_cat), std::runtime_error);
}

TEST(InventoryTest, JsonRoundTrip) {
  for (const FunctionInventory& inv :
       {FunctionInventory::English(),
        FunctionInventory({{{"the", FunctionCategory::kDet}, 12},
                           {{"that", FunctionCategory::kSconj}, 40}},
                          10, {"a.conllu", "b.conllu"})}) {
    std::ostringstream out;
    WriteInventory(out, inv);
    std::istringstream in(out.str());
    EXPECT_EQ(ReadInventory(in), inv);
  }
  std::istringstream bad(R"({"version":2})");
  EXPECT_THROW(ReadInventory(bad), std::runtime_error);
  std::istringstream bad_cat(R"({"version":1,"min_count":1,"sources":[],"categories":{"PRON":[]}})");
  EXPECT_THROW(ReadInventory(bad_cat), std::runtime_error);
}

TEST(ClassifyTest, Examples) {
  const FunctionInventory& en = FunctionInventory::English();
  const Sentence s = ParseSpec("The/DET/2 …/PUNCT/3 three/NUM/0 dog/DET/3 they/PRON/3");
  EXPECT_EQ(ClassifyToken(s.token(1), en, ClassifyMode::kPosAndForm),
            (WordClass{WordClassKind::kFunction, Upos::kDet}));
  EXPECT_EQ(ClassifyToken(s.token(2), en, ClassifyMode::kPosAndForm).kind,
            WordClassKind::kExcluded);
  EXPECT_EQ(ClassifyToken(s.token(3), en, ClassifyMode::kPosOnly).kind,
            WordClassKind::kContent);
  // Tag alone is not enough under form-and-tag classification.
  EXPECT_EQ(ClassifyToken(s.token(4), en, ClassifyMode::kPosAndForm).kind,
            WordClassKind::kContent);
  EXPECT_EQ(ClassifyToken(s.token(4), en, ClassifyMode::kPosOnly).kind,
            WordClassKind::kFunction);
  EXPECT_EQ(ClassifyToken(s.token(5), en, ClassifyMode::kPosOnly).kind,
            WordClassKind::kFunction);
  EXPECT_EQ(ClassifyToken(s.token(5), en, ClassifyMode::kPosAndForm).kind,
            WordClassKind::kContent);
}

TEST(ClassifyTest, ExcludedExactlyForNonLinguisticTags) {
  const FunctionInventory& en = FunctionInventory::English();
  for (Upos tag : kAllUpos) {
    Token t;
    t.index = 1;
    t.form = "the";
    t.upos = tag;
    for (ClassifyMode mode : {ClassifyMode::kPosOnly, ClassifyMode::kPosAndForm}) {
      const WordClass c = ClassifyToken(t, en, mode);
      EXPECT_EQ(c.kind == WordClassKind::kExcluded, IsNonLinguistic(tag));
      if (mode == ClassifyMode::kPosAndForm && c.is_function()) {
        EXPECT_TRUE(CategoryForUpos(tag).has_value());
      }
    }
    if (tag == Upos::kNum || tag == Upos::kPron || tag == Upos::kPart) {
      EXPECT_FALSE(ClassifyToken(t, en, ClassifyMode::kPosAndForm).is_function());
    }
  }
}

TEST(ClassifyTest, CaseInsensitiveOnForm) {
  const FunctionInventory& en = FunctionInventory::English();
  const Sentence s = ParseSpec("THE/DET/0 The/DET/1 the/DET/1");
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(ClassifyToken(s.token(i), en, ClassifyMode::kPosAndForm).is_function());
  }
}

}  // namespace
}  // namespace funcword
