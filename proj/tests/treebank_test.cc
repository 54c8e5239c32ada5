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

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <zlib.h>

#include <set>
#include <sstream>

#include "funcword/conllu.h"
#include "funcword/treebank.h"
#include "test_util.h"

namespace funcword {
namespace {

using testing::ExampleSentence;
using testing::ParseSpec;
using ::testing::ElementsAre;

constexpr char kExampleConllu[] =
    "# sent_id = ex1\n"
    "# text = a dog is happily chasing another dog in the garden .\n"
    "1\ta\ta\tDET\t_\t_\t2\tdet\t_\t_\n"
    "2\tdog\tdog\tNOUN\t_\t_\t5\tnsubj\t_\t_\n"
    "3\tis\tbe\tAUX\t_\t_\t5\taux\t_\t_\n"
    "4\thappily\thappily\tADV\t_\t_\t5\tadvmod\t_\t_\n"
    "5\tchasing\tchase\tVERB\t_\t_\t0\troot\t_\t_\n"
    "6\tanother\tanother\tDET\t_\t_\t7\tdet\t_\t_\n"
    "7\tdog\tdog\tNOUN\t_\t_\t5\tobj\t_\t_\n"
    "8\tin\tin\tADP\t_\t_\t10\tcase\t_\t_\n"
    "9\tthe\tthe\tDET\t_\t_\t10\tdet\t_\t_\n"
    "10\tgarden\tgarden\tNOUN\t_\t_\t5\tobl\t_\t_\n"
    "11\t.\t.\tPUNCT\t_\t_\t5\tpunct\t_\t_\n"
    "\n";

TEST(ConlluTest, ParsesExampleRootedAtChasing) {
  std::istringstream in(kExampleConllu);
  const ConlluReadResult r = ParseConllu(in, "en");
  ASSERT_EQ(r.treebank.sentences.size(), 1u);
  EXPECT_TRUE(r.diagnostics.empty());
  const Sentence& s = r.treebank.sentences[0];
  EXPECT_EQ(s.size(), 11);
  EXPECT_EQ(s.sent_id(), "ex1");
  EXPECT_THAT(s.dependents(0), ElementsAre(5));
  EXPECT_EQ(s.token(5).form, "chasing");
  EXPECT_EQ(s.token(8).deprel, "case");
  EXPECT_EQ(s.token(3).upos, Upos::kAux);
}

TEST(ConlluTest, EmptyInputGivesNoSentences) {
  std::istringstream in("");
  EXPECT_TRUE(ParseConllu(in, "en").treebank.sentences.empty());
}

TEST(ConlluTest, SelfLoopSentenceIsRejectedWithDiagnostic) {
  std::istringstream in(
      "1\tdogs\tdog\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "2\tbark\tbark\tVERB\t_\t_\t2\tdep\t_\t_\n\n");
  const ConlluReadResult r = ParseConllu(in, "en");
  EXPECT_TRUE(r.treebank.sentences.empty());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].line, 1u);
}

TEST(ConlluTest, CycleRejectedButParsingContinues) {
  std::istringstream in(
      "1\ta\ta\tX\t_\t_\t2\tdep\t_\t_\n"
      "2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n\n"
      "1\tok\tok\tINTJ\t_\t_\t0\troot\t_\t_\n\n");
  const ConlluReadResult r = ParseConllu(in, "xx");
  EXPECT_EQ(r.treebank.sentences.size(), 1u);
  EXPECT_EQ(r.diagnostics.size(), 1u);
}

TEST(ConlluTest, OutOfRangeHeadRejected) {
  std::istringstream in("1\ta\ta\tNOUN\t_\t_\t7\tdep\t_\t_\n\n");
  EXPECT_EQ(ParseConllu(in, "xx").diagnostics.size(), 1u);
}

TEST(ConlluTest, WrongColumnCountIsFatalWithLineNumber) {
  std::istringstream in("# c\n1\ta\ta\tNOUN\t_\t_\t0\n");
  try {
    ParseConllu(in, "xx");
    FAIL() << "expected ConlluError";
  } catch (const ConlluError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ConlluTest, NonIntegerHeadIsFatal) {
  std::istringstream in("1\ta\ta\tNOUN\t_\t_\tx\troot\t_\t_\n");
  EXPECT_THROW(ParseConllu(in, "xx"), ConlluError);
}

TEST(ConlluTest, SkipsMultiwordRangesAndEmptyNodes) {
  std::istringstream in(
      "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tde\tde\tADP\t_\t_\t2\tcase\t_\t_\n"
      "2\tel\tel\tDET\t_\t_\t3\tdet\t_\t_\n"
      "2.1\tghost\t_\tNOUN\t_\t_\t_\t_\t_\t_\n"
      "3\tmar\tmar\tNOUN\t_\t_\t0\troot\t_\t_\n\n");
  const ConlluReadResult r = ParseConllu(in, "es");
  ASSERT_EQ(r.treebank.sentences.size(), 1u);
  EXPECT_EQ(r.treebank.sentences[0].size(), 3);
}

TEST(ConlluTest, RoundTripIsStable) {
  const std::vector<Sentence> random = testing::RandomSentences(11, 200);
  Treebank bank;
  bank.language_code = "en";
  bank.sentences = random;
  std::ostringstream first;
  WriteConllu(first, bank);
  std::istringstream in(first.str());
  const ConlluReadResult again = ParseConllu(in, "en");
  EXPECT_TRUE(again.diagnostics.empty());
  ASSERT_EQ(again.treebank.sentences.size(), random.size());
  for (std::size_t i = 0; i < random.size(); ++i) {
    EXPECT_EQ(again.treebank.sentences[i].tokens(), random[i].tokens());
    EXPECT_EQ(again.treebank.sentences[i].sent_id(), random[i].sent_id());
  }
  std::ostringstream second;
  WriteConllu(second, again.treebank);
  EXPECT_EQ(first.str(), second.str());
}

TEST(ConlluTest, ReadsGzipByContent) {
  const auto dir = testing::TempDir("gzip");
  const auto path = dir / "en_test-ud-train.conllu.gz";
  gzFile gz = gzopen(path.string().c_str(), "wb");
  ASSERT_NE(gz, nullptr);
  gzwrite(gz, kExampleConllu, sizeof(kExampleConllu) - 1);
  gzclose(gz);
  const ConlluReadResult r = ReadConlluFile(path, "en");
  ASSERT_EQ(r.treebank.sentences.size(), 1u);
  EXPECT_EQ(r.treebank.sentences[0].size(), 11);
}

TEST(ConlluTest, LanguageCodeFromUdFileName) {
  EXPECT_EQ(LanguageCodeFromFilename("UD_English-EWT/en_ewt-ud-train.conllu"), "en");
  EXPECT_EQ(LanguageCodeFromFilename("ga_synthetic.conllu.gz"), "ga");
}

TEST(TreebankTest, SubtreeYieldOfGarden) {
  EXPECT_THAT(SubtreeYield(ExampleSentence(), 10), ElementsAre(8, 9, 10));
}

TEST(TreebankTest, SubtreeYieldOfRootCoversSentence) {
  std::vector<int> all(11);
  for (int i = 0; i < 11; ++i) all[i] = i + 1;
  EXPECT_EQ(SubtreeYield(ExampleSentence(), 5), all);
}

TEST(TreebankTest, SubtreeYieldOfLeafIsItself) {
  EXPECT_THAT(SubtreeYield(ExampleSentence(), 4), ElementsAre(4));
}

TEST(TreebankTest, SubtreeYieldRejectsBadIndex) {
  EXPECT_THROW(SubtreeYield(ExampleSentence(), 0), std::out_of_range);
  EXPECT_THROW(SubtreeYield(ExampleSentence(), 12), std::out_of_range);
}

TEST(TreebankTest, NeighborsFromExample) {
  const Sentence s = ExampleSentence();
  EXPECT_THAT(UndirectedNeighbors(s, 10), ElementsAre(5, 8, 9));
  EXPECT_THAT(UndirectedNeighbors(s, 1), ElementsAre(2));
  EXPECT_TRUE(UndirectedNeighbors(ParseSpec("hi/INTJ/0"), 1).empty());
  EXPECT_THROW(UndirectedNeighbors(s, 99), std::out_of_range);
}

TEST(TreebankTest, ValidateTokensCatchesViolations) {
  EXPECT_FALSE(ValidateTokens(ExampleSentence().tokens()));
  std::vector<Token> bad = ExampleSentence().tokens();
  bad[4].head = 1;  // chasing -> a -> dog -> chasing
  EXPECT_TRUE(ValidateTokens(bad));
  bad = ExampleSentence().tokens();
  bad[2].index = 7;
  EXPECT_TRUE(ValidateTokens(bad));
  EXPECT_THROW(Sentence s(bad), std::invalid_argument);
}

TEST(TreebankTest, MultipleRootsAreAccepted) {
  const Sentence s = ParseSpec("yes/INTJ/0 ,/PUNCT/1 no/INTJ/0");
  EXPECT_THAT(s.dependents(0), ElementsAre(1, 3));
  EXPECT_THAT(SubtreeYield(s, 1), ElementsAre(1, 2));
}

// Yield properties checked against a brute-force ancestor walk.
TEST(TreebankPropertyTest, YieldsAndNeighborsOnRandomTrees) {
  for (const Sentence& s : testing::RandomSentences(5, 500)) {
    std::set<int> covered;
    for (int root : s.dependents(0)) {
      for (int i : SubtreeYield(s, root)) covered.insert(i);
    }
    ASSERT_EQ(static_cast<int>(covered.size()), s.size());
    for (int i = 1; i <= s.size(); ++i) {
      const std::vector<int> yield = SubtreeYield(s, i);
      std::vector<int> expected;
      for (int j = 1; j <= s.size(); ++j) {
        for (int a = j; a != 0; a = s.token(a).head) {
          if (a == i) {
            expected.push_back(j);
            break;
          }
        }
      }
      ASSERT_EQ(yield, expected);
      for (int j : yield) {
        for (int k : SubtreeYield(s, j)) {
          ASSERT_TRUE(std::binary_search(yield.begin(), yield.end(), k));
        }
      }
      for (int j : UndirectedNeighbors(s, i)) {
        const auto back = UndirectedNeighbors(s, j);
        ASSERT_NE(std::find(back.begin(), back.end(), i), back.end());
      }
    }
  }
}

}  // namespace
}  // namespace funcword
