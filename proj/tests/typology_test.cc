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

#include <cmath>
#include <map>

#include "funcword/typology.h"
#include "test_util.h"

namespace funcword {
namespace {

using testing::ParseSpec;

Treebank BankOf(std::vector<Sentence> sentences) {
  Treebank b;
  b.language_code = "xx";
  b.sentences = std::move(sentences);
  return b;
}

Sentence ExampleWithoutPunct() {
  return ParseSpec(
      "a/DET/2 dog/NOUN/5 is/AUX/5 happily/ADV/5 chasing/VERB/0 another/DET/7 "
      "dog/NOUN/5 in/ADP/10 the/DET/10 garden/NOUN/5");
}

TEST(FrequencyTest, ToySentence) {
  const FrequencyProfile p =
      ComputeFrequencyProfile(BankOf({ParseSpec("the/DET/2 dog/NOUN/3 saw/VERB/0 the/DET/5 cat/NOUN/3")}));
  EXPECT_DOUBLE_EQ(p.type_ratio_function, 1.0 / 4.0);
  EXPECT_DOUBLE_EQ(p.token_ratio_function, 2.0 / 5.0);
  EXPECT_EQ(p.vocab_size, 4);
  EXPECT_EQ(p.token_total, 5);
  EXPECT_NEAR(p.type_ratio_function + p.type_ratio_content, 1.0, 1e-9);
  EXPECT_NEAR(p.token_ratio_function + p.token_ratio_content, 1.0, 1e-9);
}

TEST(FrequencyTest, NoFunctionTokens) {
  const FrequencyProfile p =
      ComputeFrequencyProfile(BankOf({ParseSpec("dogs/NOUN/2 bark/VERB/0 !/PUNCT/2")}));
  EXPECT_EQ(p.token_ratio_function, 0.0);
  EXPECT_EQ(p.token_total, 2);
}

TEST(FrequencyTest, AllExcludedIsAnError) {
  EXPECT_THROW(ComputeFrequencyProfile(BankOf({ParseSpec("!/PUNCT/0 $/SYM/1")})),
               std::invalid_argument);
}

TEST(FrequencyTest, MixedTagTypeGoesToMajorityTiesToFunction) {
  // "that": DET twice, NOUN once -> function. "round": ADP once, ADJ once -> tie.
  const FrequencyProfile p = ComputeFrequencyProfile(BankOf(
      {ParseSpec("that/DET/2 that/NOUN/0 That/DET/2"), ParseSpec("round/ADP/0 round/ADJ/1")}));
  EXPECT_EQ(p.vocab_size, 2);
  EXPECT_DOUBLE_EQ(p.type_ratio_function, 1.0);
  EXPECT_DOUBLE_EQ(p.token_ratio_function, 1.0);
}

TEST(EntropyTest, DeterminerAttachedOnlyToNouns) {
  const EntropyProfile p = ComputeNeighborEntropy(
      BankOf({ParseSpec("the/DET/2 dog/NOUN/3 barks/VERB/0"), ParseSpec("a/DET/2 cat/NOUN/0")}));
  EXPECT_EQ(p.per_tag_entropy.at(Upos::kDet), 0.0);
}

TEST(EntropyTest, TwoEquiprobableNeighborTags) {
  const EntropyProfile p = ComputeNeighborEntropy(
      BankOf({ParseSpec("quickly/ADV/2 ran/VERB/0"), ParseSpec("very/ADV/2 dogs/NOUN/0")}));
  EXPECT_DOUBLE_EQ(p.per_tag_entropy.at(Upos::kAdv), 1.0);
}

TEST(EntropyTest, UnseenTagsAreAbsentAndExcludedTagsIgnored) {
  const EntropyProfile p =
      ComputeNeighborEntropy(BankOf({ParseSpec("dogs/NOUN/2 bark/VERB/0 ./PUNCT/2")}));
  EXPECT_FALSE(p.per_tag_entropy.count(Upos::kDet));
  EXPECT_FALSE(p.per_tag_entropy.count(Upos::kPunct));
  EXPECT_EQ(p.per_tag_entropy.at(Upos::kVerb), 0.0);
}

// Independent recount: every non-root arc between two linguistic tokens adds
// one observation in each direction; the Shannon entropy and frequency-weighted class
// means are then applied directly.
struct EntropyOracle {
  std::map<Upos, std::map<Upos, long>> hist;
  std::map<Upos, long> freq;

  explicit EntropyOracle(const Treebank& bank) {
    for (const Sentence& s : bank.sentences) {
      for (const Token& t : s.tokens()) {
        if (!IsNonLinguistic(t.upos)) ++freq[t.upos];
        if (t.head == 0) continue;
        const Upos h = s.token(t.head).upos;
        if (IsNonLinguistic(t.upos) || IsNonLinguistic(h)) continue;
        ++hist[t.upos][h];
        ++hist[h][t.upos];
      }
    }
  }
  double H(Upos x) const {
    long total = 0;
    for (const auto& [t, n] : hist.at(x)) total += n;
    double h = 0.0;
    for (const auto& [t, n] : hist.at(x)) {
      const double p = static_cast<double>(n) / total;
      h += -p * std::log(p) / std::log(2.0);
    }
    return h;
  }
  double Weighted(bool function) const {
    double num = 0.0, den = 0.0;
    for (const auto& [x, h] : hist) {
      if (IsClosedClass(x) != function) continue;
      num += freq.at(x) * H(x);
      den += freq.at(x);
    }
    return den == 0.0 ? 0.0 : num / den;
  }
};

TEST(EntropyPropertyTest, MatchesBruteForceRecount) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Treebank bank = BankOf(testing::RandomSentences(seed, 100));
    const EntropyProfile p = ComputeNeighborEntropy(bank);
    const EntropyOracle oracle(bank);
    ASSERT_EQ(p.per_tag_entropy.size(), oracle.hist.size());
    for (const auto& [tag, h] : p.per_tag_entropy) {
      EXPECT_NEAR(h, oracle.H(tag), 1e-12);
      EXPECT_GE(h, 0.0);
      EXPECT_LE(h, std::log2(static_cast<double>(oracle.hist.at(tag).size())) + 1e-12);
    }
    EXPECT_NEAR(p.weighted_function_entropy, oracle.Weighted(true), 1e-12);
    EXPECT_NEAR(p.weighted_content_entropy, oracle.Weighted(false), 1e-12);
  }
}

TEST(EntropyPropertyTest, InvariantToOrderAndDuplication) {
  std::vector<Sentence> sentences = testing::RandomSentences(7, 80);
  const EntropyProfile base = ComputeNeighborEntropy(BankOf(sentences));
  std::vector<Sentence> reversed(sentences.rbegin(), sentences.rend());
  std::vector<Sentence> doubled = sentences;
  doubled.insert(doubled.end(), sentences.begin(), sentences.end());
  for (const auto& other : {BankOf(reversed), BankOf(doubled)}) {
    const EntropyProfile p = ComputeNeighborEntropy(other);
    for (const auto& [tag, h] : base.per_tag_entropy) {
      EXPECT_NEAR(p.per_tag_entropy.at(tag), h, 1e-12);
    }
    EXPECT_NEAR(p.weighted_function_entropy, base.weighted_function_entropy, 1e-12);
  }
}

TEST(BoundaryTest, ExampleSentenceAllFunctionTargetsAtBoundary) {
  const Sentence s = testing::ExampleSentence();
  const BoundaryOptions on;
  EXPECT_TRUE(IsAtBoundary(s, 1, on));   // a: leftmost of yield(dog)
  EXPECT_TRUE(IsAtBoundary(s, 6, on));   // another
  EXPECT_TRUE(IsAtBoundary(s, 8, on));   // in: leftmost of yield(garden)
  EXPECT_TRUE(IsAtBoundary(s, 9, on));   // the: relaxed through "in"
  const BoundaryProfile p = ComputeBoundaryProfile(BankOf({s}));
  EXPECT_EQ(p.counted_function_tokens, 4);
  EXPECT_DOUBLE_EQ(p.function_boundary_ratio, 1.0);

  const BoundaryProfile strict = ComputeBoundaryProfile(BankOf({s}), {.relaxation = false});
  EXPECT_DOUBLE_EQ(strict.function_boundary_ratio, 0.75);
}

TEST(BoundaryTest, OnlyDependentIsAlwaysAtBoundary) {
  const Sentence s = ParseSpec("big/ADJ/2 dog/NOUN/0 of/ADP/2");
  EXPECT_TRUE(IsAtBoundary(s, 1, {}));
  const Sentence t = ParseSpec("x/NOUN/0 of/ADP/3 y/NOUN/1");
  EXPECT_TRUE(IsAtBoundary(t, 2, {.relaxation = false}));
}

TEST(BoundaryTest, TransitiveChainAcrossFunctionRun) {
  // "of all the houses": each function word hangs off "houses".
  const Sentence s = ParseSpec("of/ADP/4 all/DET/4 the/DET/4 houses/NOUN/0");
  EXPECT_TRUE(IsAtBoundary(s, 3, {.relaxation = true, .transitive = true}));
  EXPECT_FALSE(IsAtBoundary(s, 3, {.relaxation = true, .transitive = false}));
  EXPECT_TRUE(IsAtBoundary(s, 2, {.relaxation = true, .transitive = false}));
}

TEST(BoundaryTest, PronounsAndAuxiliariesDoNotMediate) {
  const Sentence s = ParseSpec("is/AUX/3 the/DET/3 plan/NOUN/0");
  // "is" is AUX, so it cannot carry "the" to the periphery.
  const Sentence t = ParseSpec("go/VERB/0 is/AUX/4 the/DET/4 plan/NOUN/1 now/ADV/4");
  EXPECT_FALSE(IsAtBoundary(t, 3, {}));
  EXPECT_FALSE(IsAtBoundary(s, 2, {}));
}

TEST(BoundaryTest, RootTargetsAreNotCounted) {
  const BoundaryProfile p = ComputeBoundaryProfile(BankOf({ParseSpec("the/DET/0")}));
  EXPECT_EQ(p.counted_function_tokens, 0);
  EXPECT_EQ(p.function_boundary_ratio, 0.0);
}

// Brute-force strict periphery test, relaxation monotonicity and ratio ranges.
TEST(BoundaryPropertyTest, StrictMatchesOracleAndRelaxationIsMonotone) {
  const Treebank bank = BankOf(testing::RandomSentences(17, 1000, 1, 25));
  const BoundaryOptions strict{.relaxation = false};
  const BoundaryOptions single{.relaxation = true, .transitive = false};
  const BoundaryOptions chained{};
  for (const Sentence& s : bank.sentences) {
    for (const Token& t : s.tokens()) {
      if (t.head == 0) continue;
      int lo = t.head, hi = t.head;
      for (const Token& u : s.tokens()) {
        for (int a = u.index; a != 0; a = s.token(a).head) {
          if (a == t.head) {
            lo = std::min(lo, u.index);
            hi = std::max(hi, u.index);
            break;
          }
        }
      }
      const bool expected = t.index == lo || t.index == hi;
      ASSERT_EQ(IsAtBoundary(s, t.index, strict), expected);
      if (IsAtBoundary(s, t.index, strict)) {
        ASSERT_TRUE(IsAtBoundary(s, t.index, single));
      }
      if (IsAtBoundary(s, t.index, single)) {
        ASSERT_TRUE(IsAtBoundary(s, t.index, chained));
      }
    }
  }
  const BoundaryProfile a = ComputeBoundaryProfile(bank, strict);
  const BoundaryProfile b = ComputeBoundaryProfile(bank, single);
  const BoundaryProfile c = ComputeBoundaryProfile(bank, chained);
  EXPECT_LE(a.function_boundary_ratio, b.function_boundary_ratio);
  EXPECT_LE(b.function_boundary_ratio, c.function_boundary_ratio);
  EXPECT_EQ(a.content_boundary_ratio, c.content_boundary_ratio);
  for (const BoundaryProfile& p : {a, b, c}) {
    EXPECT_GE(p.function_boundary_ratio, 0.0);
    EXPECT_LE(p.function_boundary_ratio, 1.0);
  }
}

TEST(ComplexityTest, TwoWordSentence) {
  const ComplexityProfile p =
      ComputeComplexityProfile(BankOf({ParseSpec("dogs/NOUN/2 bark/VERB/0")}));
  EXPECT_DOUBLE_EQ(p.mean_sentence_length, 2.0);
  EXPECT_DOUBLE_EQ(p.mean_dependency_distance, 1.0);
}

TEST(ComplexityTest, ExampleArcs) {
  const ComplexityProfile p = ComputeComplexityProfile(BankOf({ExampleWithoutPunct()}));
  EXPECT_EQ(p.arc_count, 9);
  EXPECT_DOUBLE_EQ(p.mean_dependency_distance, (1 + 3 + 2 + 1 + 1 + 2 + 2 + 1 + 5) / 9.0);
}

TEST(TypologyTest, ProfilesArePure) {
  const Treebank bank = BankOf(testing::RandomSentences(23, 200));
  const BoundaryProfile b1 = ComputeBoundaryProfile(bank);
  const BoundaryProfile b2 = ComputeBoundaryProfile(bank);
  EXPECT_EQ(b1.boundary_function_tokens, b2.boundary_function_tokens);
  EXPECT_EQ(ComputeFrequencyProfile(bank).token_ratio_function,
            ComputeFrequencyProfile(bank).token_ratio_function);
}

}  // namespace
}  // namespace funcword
