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

#include "funcword/minimal_pairs.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "funcword/conllu.h"
#include "funcword/stats.h"
#include "oracles.h"
#include "test_util.h"

namespace funcword {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

MinimalPair Pair(std::string id, std::string subcategory, std::string good, std::string bad,
                 std::string phenomenon = "binding") {
  return {std::move(id), std::move(phenomenon), std::move(subcategory), std::move(good),
          std::move(bad)};
}

std::vector<std::string> Ids(const Suite& suite) {
  std::vector<std::string> ids;
  for (const MinimalPair& p : suite) ids.push_back(p.pair_id);
  return ids;
}

Suite ToySuite() {
  std::istringstream in(testing::ReadFile(testing::DataDir() / "benchmark/toy_suite.jsonl"));
  return ReadSuite(in);
}

ParseIndex ToyParses() {
  return IndexParses(
      ReadConlluFile(testing::DataDir() / "benchmark/toy_suite.conllu", "en").treebank);
}

TEST(SuiteIoTest, RoundTrip) {
  const Suite suite = {Pair("p1", "s", "A dog ran.", "A dog run."),
                       Pair("p2", "t", "Cats \"sleep\".", "Cats sleeps.", "ellipsis")};
  std::ostringstream out;
  WriteSuite(out, suite);
  std::istringstream in(out.str() + "\n\n");
  EXPECT_EQ(ReadSuite(in), suite);
}

TEST(SuiteIoTest, Errors) {
  std::istringstream duplicate(
      "{\"pair_id\":\"a\",\"phenomenon\":\"x\",\"subcategory\":\"y\",\"good\":\"g\",\"bad\":\"b\"}\n"
      "{\"pair_id\":\"a\",\"phenomenon\":\"x\",\"subcategory\":\"y\",\"good\":\"g\",\"bad\":\"b\"}\n");
  try {
    ReadSuite(duplicate);
    ADD_FAILURE();
  } catch (const std::runtime_error& e) {
    EXPECT_THAT(e.what(), HasSubstr("line 2"));
  }
  std::istringstream missing("{\"pair_id\":\"a\",\"good\":\"g\",\"bad\":\"b\"}\n");
  EXPECT_THROW(ReadSuite(missing), std::runtime_error);
  std::istringstream garbage("{\"pair_id\":\n");
  EXPECT_THROW(ReadSuite(garbage), std::runtime_error);
  EXPECT_EQ(FindDegeneratePair({Pair("a", "s", "x", "y"), Pair("b", "s", "z", "z")}), "b");
  EXPECT_FALSE(FindDegeneratePair({Pair("a", "s", "x", "y")}).has_value());
}

TEST(DropCriticalTest, DefaultListHasThirteenSubcategories) {
  const auto& list = DefaultFunctionCriticalSubcategories();
  EXPECT_EQ(list.size(), 13u);
  EXPECT_EQ(std::set<std::string>(list.begin(), list.end()).size(), 13u);
  int determiner = 0;
  for (const std::string& s : list) determiner += s.rfind("determiner_noun_agreement", 0) == 0;
  EXPECT_EQ(determiner, 8);
}

TEST(DropCriticalTest, RemovesListedAndReportsUnknown) {
  const Suite suite = {Pair("1", "determiner_noun_agreement_1", "a", "b"),
                       Pair("2", "wh_island", "a", "b"),
                       Pair("3", "determiner_noun_agreement_1", "a", "b")};
  const DropCriticalResult r =
      DropFunctionCritical(suite, {"no_such_thing", "determiner_noun_agreement_1"});
  EXPECT_THAT(Ids(r.suite), ElementsAre("2"));
  EXPECT_THAT(r.removed_subcategories, ElementsAre("determiner_noun_agreement_1"));
  EXPECT_THAT(r.unknown_subcategories, ElementsAre("no_such_thing"));
  EXPECT_EQ(DropFunctionCritical(suite, {}).suite, suite);
}

TEST(DropCriticalTest, ToySuiteLosesExactlyTheListedSubcategories) {
  const DropCriticalResult r =
      DropFunctionCritical(ToySuite(), DefaultFunctionCriticalSubcategories());
  EXPECT_EQ(r.removed_subcategories.size(), 13u);
  EXPECT_TRUE(r.unknown_subcategories.empty());
  EXPECT_EQ(r.suite.size(), 70u);
}

TEST(DropIdenticalTest, Examples) {
  const Suite suite = {Pair("1", "s", "dog ran", "dog ran"), Pair("2", "s", "dog ran", "dog run"),
                       Pair("3", "s", " The  dog\tran ", "the dog ran"),
                       Pair("4", "s", "dog ran.", "dog ran")};
  const DropIdenticalResult r = DropIdentical(suite);
  EXPECT_THAT(Ids(r.suite), ElementsAre("2", "4"));
  EXPECT_THAT(r.removed, ElementsAre("1", "3"));
  EXPECT_EQ(NormalizeForComparison("  A \n B  "), "a b");
}

TEST(DropIdenticalTest, NeverRemovesPairsThatDiffer) {
  Rng rng(4);
  const std::string alphabet = "abAB .,'";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string a, b;
    for (int k = 0, n = static_cast<int>(rng.Below(6)); k < n; ++k) {
      a += alphabet[rng.Below(alphabet.size())];
    }
    for (int k = 0, n = static_cast<int>(rng.Below(6)); k < n; ++k) {
      b += alphabet[rng.Below(alphabet.size())];
    }
    const bool removed = !DropIdentical({Pair("x", "s", a, b)}).removed.empty();
    EXPECT_EQ(removed, NormalizeForComparison(a) == NormalizeForComparison(b)) << a << "|" << b;
  }
}

TEST(TransformSuiteTest, NaturalIsIdentityAndNoFunctionMergesAuxiliaryPairs) {
  // The pair differs only in the auxiliary.
  const Sentence good = testing::ParseSpec("dogs/NOUN/3 have/AUX/3 run/VERB/0", "p.good");
  const Sentence bad = testing::ParseSpec("dogs/NOUN/3 has/AUX/3 run/VERB/0", "p.bad");
  ParseIndex parses = {{"p.good", good}, {"p.bad", bad}};
  const Suite suite = {Pair("p", "s", "Dogs have run", "Dogs has run")};
  const FunctionInventory& en = FunctionInventory::English();

  ConditionSpec spec;
  EXPECT_EQ(TransformSuite(suite, spec, {}, en, {}).suite, suite);

  spec.condition = Condition::kNoFunction;
  const SuiteTransform t = TransformSuite(suite, spec, parses, en, {});
  ASSERT_EQ(t.suite.size(), 1u);
  EXPECT_EQ(t.suite[0].good, "dogs run");
  EXPECT_EQ(t.suite[0].bad, "dogs run");
  EXPECT_THAT(DropIdentical(t.suite).removed, ElementsAre("p"));

  parses.erase("p.bad");
  const SuiteTransform missing = TransformSuite(suite, spec, parses, en, {});
  EXPECT_TRUE(missing.suite.empty());
  EXPECT_THAT(missing.missing_parse, ElementsAre("p"));
}

TEST(TransformSuiteTest, MoreFunctionUsesOnePseudowordPerPairPosition) {
  const Suite suite = ToySuite();
  const ParseIndex parses = ToyParses();
  Corpus corpus;
  for (const auto& [id, s] : parses) corpus.sentences.push_back(s);
  ConditionSpec spec;
  spec.condition = Condition::kMoreFunction;
  spec.seed = 3;
  const FunctionInventory& en = FunctionInventory::English();
  const ConditionTables tables =
      PrepareTables(corpus, spec, en, SyllableSubstitutionGenerator());
  const SuiteTransform t = TransformSuite(suite, spec, parses, en, tables, 3);
  ASSERT_EQ(t.suite.size(), suite.size());
  EXPECT_EQ(t.suite, TransformSuite(suite, spec, parses, en, tables, 1).suite);
  // Members sharing a function form at a shared position get the same
  // pseudoword.
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const Sentence& g = parses.at(suite[i].pair_id + ".good");
    const Sentence& b = parses.at(suite[i].pair_id + ".bad");
    const auto gw = testing::Split(t.suite[i].good);
    const auto bw = testing::Split(t.suite[i].bad);
    if (g.size() != b.size()) continue;
    const auto gf = FunctionFlags(g, en);
    const auto bf = FunctionFlags(b, en);
    for (int k = 1; k <= g.size(); ++k) {
      if (gf[k - 1] && bf[k - 1] &&
          LowercaseForm(g.token(k).form) == LowercaseForm(b.token(k).form)) {
        EXPECT_EQ(gw[k - 1], bw[k - 1]) << suite[i].pair_id;
      }
    }
  }
}

TEST(IntersectionTest, SetIntersectionInSourceOrder) {
  const Suite source = {Pair("1", "s", "a", "b"), Pair("2", "s", "a", "b"),
                        Pair("3", "s", "a", "b")};
  const std::map<std::string, Suite> suites = {
      {"A", {source[0], source[1], source[2]}},
      {"B", {source[2], source[1]}},
      {"C", {source[0], source[2]}}};
  const auto out = IntersectionFilter(suites, source);
  ASSERT_EQ(out.size(), 3u);
  for (const auto& [name, suite] : out) EXPECT_THAT(Ids(suite), ElementsAre("3")) << name;

  const auto single = IntersectionFilter({{"A", {source[2], source[0]}}}, source);
  EXPECT_THAT(Ids(single.at("A")), ElementsAre("1", "3"));

  EXPECT_THROW(IntersectionFilter({{"A", {Pair("9", "s", "a", "b")}}}, source),
               std::invalid_argument);
}

TEST(PipelineTest, ToySuiteFiltering) {
  const oracle::BenchmarkCheck check =
      oracle::CheckBenchmarkFiltering(ToySuite(), ToyParses(), FunctionInventory::English(), 1);
  EXPECT_TRUE(check.violations.empty()) << check.violations.front();
  EXPECT_EQ(check.excluded_present, 13u);
  EXPECT_EQ(check.result.report.source_count, 200u);
  EXPECT_EQ(check.result.report.retained_count, 70u);
  EXPECT_GT(check.result.report.surviving, 0u);
  EXPECT_LT(check.result.report.surviving, 70u);
}

TEST(PipelineTest, FilterReportJson) {
  FilterReport r;
  r.source_count = 3;
  r.removed_function_critical = {"x"};
  r.removed_identical["NoFunction"] = {"2"};
  r.removed_by_intersection = {"2"};
  r.retained_count = 2;
  r.surviving = 1;
  std::ostringstream out;
  WriteFilterReport(out, r);
  EXPECT_THAT(out.str(), HasSubstr("\"surviving\": 1"));
  EXPECT_THAT(out.str(), HasSubstr("\"NoFunction\": [\n      \"2\""));
}

TEST(OutcomesTest, ReadAndDerive) {
  std::istringstream in(
      "{\"pair_id\":\"a\",\"good_logprob\":-1.5,\"bad_logprob\":-2.0}\n"
      "\n"
      "{\"pair_id\":\"b\",\"good_logprob\":-3,\"bad_logprob\":-2,\"correct\":true}\n");
  const Outcomes o = ReadOutcomes(in);
  EXPECT_EQ(o, (Outcomes{{"a", true}, {"b", true}}));
  std::istringstream bad("{\"pair_id\":\"a\"}\n");
  EXPECT_THROW(ReadOutcomes(bad), std::runtime_error);

  std::ostringstream out;
  WriteOutcomeRecords(out, {{"a", -1.5, -2.0, true}});
  std::istringstream back(out.str());
  EXPECT_EQ(ReadOutcomes(back), (Outcomes{{"a", true}}));
}

TEST(ScoreTest, GroupColumns) {
  EXPECT_THAT(GroupColumns(), ElementsAre("S-V Agr", "Irregular", "NPI", "Island", "Filler.Gap",
                                          "Ellipsis", "Ctrl.Rais", "Binding", "Arg.Str",
                                          "Ana.Agr"));
  EXPECT_EQ(GroupColumnFor("npi_licensing"), "NPI");
  EXPECT_EQ(GroupColumnFor("Binding"), "Binding");
  EXPECT_FALSE(GroupColumnFor("quantifiers").has_value());
}

TEST(ScoreTest, AllCorrectAndSelfComparison) {
  const Suite suite = {Pair("1", "s1", "a", "b"), Pair("2", "s2", "a", "b"),
                       Pair("3", "s2", "a", "b", "ellipsis")};
  const Outcomes all = {{"1", true}, {"2", true}, {"3", true}};
  const ScoreReport r = ComputeScoreReport(suite, {{"Natural", all}, {"Copy", all}}, "Natural");
  EXPECT_DOUBLE_EQ(r.scores[0].overall, 100.0);
  ASSERT_EQ(r.comparisons.size(), 1u);
  EXPECT_DOUBLE_EQ(r.comparisons[0].overall_delta, 0.0);
  ASSERT_TRUE(r.comparisons[0].ttest_defined);
  EXPECT_DOUBLE_EQ(r.comparisons[0].ttest.p, 1.0);
  EXPECT_DOUBLE_EQ(r.comparisons[0].ttest.t, 0.0);
  std::ostringstream csv;
  WriteScoreCsv(csv, r);
  EXPECT_EQ(csv.str(),
            "condition,row,Overall,S-V Agr,Irregular,NPI,Island,Filler.Gap,Ellipsis,"
            "Ctrl.Rais,Binding,Arg.Str,Ana.Agr\n"
            "Natural,accuracy,100.0,,,,,,100.0,,100.0,,\n"
            "Copy,accuracy,100.0,,,,,,100.0,,100.0,,\n"
            "Copy,delta,0.0,,,,,,0.0,,0.0,,\n");
}

TEST(ScoreTest, DeltasAreAntisymmetric) {
  Rng rng(12);
  Suite suite;
  Outcomes a, b;
  const std::vector<std::string> phenomena = {"binding", "ellipsis", "island_effects", "other"};
  for (int k = 0; k < 300; ++k) {
    const std::string id = "p" + std::to_string(k);
    suite.push_back(Pair(id, "sub" + std::to_string(k % 9), "g", "b",
                         phenomena[rng.Below(phenomena.size())]));
    a[id] = rng.Below(3) != 0;
    b[id] = rng.Below(2) != 0;
  }
  const ScoreReport ab = ComputeScoreReport(suite, {{"A", a}, {"B", b}}, "A");
  const ScoreReport ba = ComputeScoreReport(suite, {{"A", a}, {"B", b}}, "B");
  EXPECT_DOUBLE_EQ(ScoreDelta(ab, "B", "A"), -ScoreDelta(ba, "A", "B"));
  EXPECT_DOUBLE_EQ(ab.comparisons[0].overall_delta, -ba.comparisons[0].overall_delta);
  for (const auto& [group, d] : ab.comparisons[0].group_deltas) {
    EXPECT_DOUBLE_EQ(d, -ba.comparisons[0].group_deltas.at(group));
  }
  EXPECT_DOUBLE_EQ(ab.comparisons[0].ttest.t, -ba.comparisons[0].ttest.t);
  EXPECT_DOUBLE_EQ(ab.comparisons[0].ttest.p, ba.comparisons[0].ttest.p);
}

TEST(ScoreTest, DeltaOfUnroundedAccuracies) {
  // 10000 pairs: 6734 vs 5646 correct gives 67.34 and 56.46, printed as
  // 67.3 and 56.5; the delta of the unrounded values is -10.88 -> -10.9.
  Suite suite;
  Outcomes natural, none;
  for (int k = 0; k < 10000; ++k) {
    const std::string id = "p" + std::to_string(k);
    suite.push_back(Pair(id, k % 2 ? "s1" : "s2", "g", "b"));
    natural[id] = k < 6734;
    none[id] = k < 5646;
  }
  const ScoreReport r =
      ComputeScoreReport(suite, {{"Natural", natural}, {"NoFunction", none}}, "Natural");
  EXPECT_EQ(FormatOneDecimal(r.scores[0].overall), "67.3");
  EXPECT_EQ(FormatOneDecimal(r.scores[1].overall), "56.5");
  EXPECT_EQ(FormatOneDecimal(r.comparisons[0].overall_delta, true), "-10.9");
}

TEST(ScoreTest, Errors) {
  const Suite suite = {Pair("1", "s", "a", "b"), Pair("2", "s", "a", "b")};
  const Outcomes one = {{"1", true}};
  const Outcomes two = {{"1", true}, {"2", false}};
  EXPECT_THROW(ComputeScoreReport(suite, {{"A", one}, {"B", two}}, "A"), std::invalid_argument);
  EXPECT_THROW(ComputeScoreReport(suite, {{"A", {{"9", true}}}}, "A"), std::invalid_argument);
  EXPECT_THROW(ComputeScoreReport(suite, {{"A", two}}, "Natural"), std::invalid_argument);
  EXPECT_THROW(ComputeScoreReport(suite, {}, "A"), std::invalid_argument);
  // One subcategory: no t-test row.
  const ScoreReport r = ComputeScoreReport(suite, {{"A", two}, {"B", two}}, "A");
  EXPECT_FALSE(r.comparisons[0].ttest_defined);
  std::ostringstream out;
  WriteTTestCsv(out, r);
  EXPECT_EQ(out.str(), "condition,reference,n,mean_difference,t,df,p\n");
}

TEST(StatsTest, PairedTTestMatchesReference) {
  // Reference values from an independent statistics package.
  const std::vector<double> a = {70.0, 55.0, 80.0, 62.5, 90.0};
  const std::vector<double> b = {65.0, 57.5, 71.0, 60.0, 85.0};
  const TTestResult r = PairedTTest(a, b);
  EXPECT_NEAR(r.t, 2.012583137063029, 1e-12);
  EXPECT_NEAR(r.p, 0.11446127122608372, 1e-12);
  EXPECT_DOUBLE_EQ(r.df, 4.0);
  EXPECT_NEAR(r.mean_difference, 3.8, 1e-12);
  EXPECT_EQ(r.n, 5u);
}

TEST(StatsTest, PairedTTestEdgeCases) {
  const std::vector<double> a = {1, 2, 3};
  const TTestResult same = PairedTTest(a, a);
  EXPECT_EQ(same.t, 0.0);
  EXPECT_EQ(same.p, 1.0);
  const std::vector<double> shifted = {2, 3, 4};
  const TTestResult constant = PairedTTest(shifted, a);
  EXPECT_TRUE(std::isinf(constant.t));
  EXPECT_GT(constant.t, 0);
  EXPECT_EQ(constant.p, 0.0);
  EXPECT_THROW(PairedTTest(a, std::vector<double>{1, 2}), std::invalid_argument);
  EXPECT_THROW(PairedTTest(std::vector<double>{1}, std::vector<double>{1}),
               std::invalid_argument);
}

TEST(StatsTest, MedianAndFormatting) {
  EXPECT_DOUBLE_EQ(Median({3, 1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(Median({4, 1, 2, 3}), 2.5);
  EXPECT_THROW(Median({}), std::invalid_argument);
  EXPECT_EQ(FormatOneDecimal(67.25), "67.3");
  EXPECT_EQ(FormatOneDecimal(-0.04), "0.0");
  EXPECT_EQ(FormatOneDecimal(-10.88, true), "-10.9");
  EXPECT_EQ(FormatOneDecimal(2.0, true), "+2.0");
  EXPECT_EQ(FormatOneDecimal(0.0, true), "0.0");
  EXPECT_DOUBLE_EQ(RoundTo(-2.25, 1), -2.3);
}

}  // namespace
}  // namespace funcword
