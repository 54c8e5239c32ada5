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

#ifndef FUNCWORD_MINIMAL_PAIRS_H_
#define FUNCWORD_MINIMAL_PAIRS_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "funcword/counterfactual.h"
#include "funcword/inventory.h"
#include "funcword/stats.h"
#include "funcword/treebank.h"

namespace funcword {

struct MinimalPair {
  std::string pair_id;
  std::string phenomenon;
  std::string subcategory;
  std::string good;
  std::string bad;

  bool operator==(const MinimalPair&) const = default;
};

using Suite = std::vector<MinimalPair>;

// JSON-lines, one object per line with string fields pair_id, phenomenon,
// subcategory, good and bad. Blank lines are skipped. Throws
// std::runtime_error with the line number on malformed lines or a duplicate
// pair_id.
Suite ReadSuite(std::istream& in);
void WriteSuite(std::ostream& out, const Suite& suite);

// Source suites must also have good != bad; returns the first offending
// pair_id.
std::optional<std::string> FindDegeneratePair(const Suite& suite);

// The 13 subcategories whose critical word is a function word: 8 determiner
// noun agreement variants, matrix_question_npi_licensor_present and 4
// quantifier subcategories.
const std::vector<std::string>& DefaultFunctionCriticalSubcategories();

struct DropCriticalResult {
  Suite suite;
  // Listed subcategories that occurred in the suite, in list order.
  std::vector<std::string> removed_subcategories;
  // Listed subcategories that never occurred in the suite.
  std::vector<std::string> unknown_subcategories;
};

DropCriticalResult DropFunctionCritical(const Suite& suite,
                                        const std::vector<std::string>& exclusions);

// Lowercases, trims and collapses whitespace runs to one space.
std::string NormalizeForComparison(std::string_view text);

struct DropIdenticalResult {
  Suite suite;
  std::vector<std::string> removed;
};

DropIdenticalResult DropIdentical(const Suite& suite);

// Parses of suite sentences keyed by sent_id "<pair_id>.good" and
// "<pair_id>.bad".
using ParseIndex = std::unordered_map<std::string, Sentence>;

// Throws std::invalid_argument on a duplicate sent_id.
ParseIndex IndexParses(const Treebank& treebank);

struct SuiteTransform {
  Suite suite;
  // Pairs dropped because a member had no parse (source order).
  std::vector<std::string> missing_parse;
};

// Rewrites both members of each pair under `spec`. Natural returns the text
// unchanged and needs no parse; every other condition rewrites the parsed
// tokens. MoreFunction draws are keyed on the pair id so both members get
// the same pseudoword at shared positions. RandomDep deals one seeded,
// suite-wide shuffle of the good members' function forms: each pair takes
// its own slice, and the bad member reuses that slice cyclically.
SuiteTransform TransformSuite(const Suite& suite, const ConditionSpec& spec,
                              const ParseIndex& parses,
                              const FunctionInventory& inventory,
                              const ConditionTables& tables, int jobs = 1);

// Restricts every suite to the pair ids present in all of them, in source
// order. Throws std::invalid_argument if any suite holds an id that is not
// in `source`.
std::map<std::string, Suite> IntersectionFilter(
    const std::map<std::string, Suite>& suites, const Suite& source);

struct FilterReport {
  std::vector<std::string> removed_function_critical;
  std::vector<std::string> unknown_exclusions;
  std::map<std::string, std::vector<std::string>> removed_missing_parse;
  std::map<std::string, std::vector<std::string>> removed_identical;
  // Retained pairs lost in at least one condition.
  std::vector<std::string> removed_by_intersection;
  std::size_t source_count = 0;
  std::size_t retained_count = 0;  // after dropping excluded subcategories
  std::size_t surviving = 0;
};

struct FilterResult {
  std::map<std::string, Suite> suites;  // condition name -> filtered suite
  FilterReport report;
};

// Steps 2 and 3 of the protocol over already transformed suites:
// drop_identical per condition, then intersection. `retained` is the
// source after step 1.
FilterResult FilterTransformed(const Suite& retained,
                               const std::map<std::string, SuiteTransform>& transformed);

struct PipelineOptions {
  std::vector<std::string> exclusions = DefaultFunctionCriticalSubcategories();
  int jobs = 1;
};

// The full protocol: drop excluded subcategories, transform under every
// spec, drop identical pairs, intersect. `tables` holds one entry per spec
// condition name (missing entries mean empty tables).
FilterResult RunBenchmarkPipeline(const Suite& source,
                                  const std::vector<ConditionSpec>& specs,
                                  const ParseIndex& parses,
                                  const FunctionInventory& inventory,
                                  const std::map<std::string, ConditionTables>& tables,
                                  const PipelineOptions& options = {});

void WriteFilterReport(std::ostream& out, const FilterReport& report);

// pair_id -> model preferred the good member.
using Outcomes = std::map<std::string, bool>;

// JSON-lines {pair_id, good_logprob, bad_logprob, correct}. A missing
// `correct` is derived as good_logprob > bad_logprob. Throws
// std::runtime_error with the line number on malformed input.
Outcomes ReadOutcomes(std::istream& in);

struct OutcomeRecord {
  std::string pair_id;
  double good_logprob = 0.0;
  double bad_logprob = 0.0;
  bool correct = false;
};

// Writes the runner's outcome JSON-lines layout.
void WriteOutcomeRecords(std::ostream& out, const std::vector<OutcomeRecord>& records);

// Report columns after "Overall", in table order.
const std::vector<std::string>& GroupColumns();
// Maps a BLiMP phenomenon (linguistics term) or a column label to its
// column; nullopt for phenomena that only count toward Overall.
std::optional<std::string> GroupColumnFor(std::string_view phenomenon);

struct ConditionScores {
  std::string condition;
  double overall = 0.0;  // percent, pooled over pairs
  std::map<std::string, double> groups;       // column -> percent
  std::map<std::string, double> subcategories;  // subcategory -> percent
  std::size_t pair_count = 0;
};

struct ScoreComparison {
  std::string condition;
  double overall_delta = 0.0;  // unrounded, condition minus baseline
  std::map<std::string, double> group_deltas;
  TTestResult ttest;  // over per-subcategory accuracies
  bool ttest_defined = false;  // needs at least two subcategories
};

struct ScoreReport {
  std::string baseline;
  std::vector<ConditionScores> scores;  // input order
  std::vector<ScoreComparison> comparisons;  // every non-baseline condition
};

// Throws std::invalid_argument when conditions cover different id sets, an
// id is missing from the suite, the baseline is absent or the outcome list
// is empty.
ScoreReport ComputeScoreReport(
    const Suite& suite,
    const std::vector<std::pair<std::string, Outcomes>>& outcomes,
    const std::string& baseline);

double ScoreDelta(const ScoreReport& report, const std::string& condition,
                  const std::string& reference);

// CSV in the accuracy-table layout: condition,row,Overall,<groups...>.
// "accuracy" rows hold one-decimal percentages; "delta" rows hold signed
// differences from the baseline, rounded after subtraction. Groups without
// pairs are left empty.
void WriteScoreCsv(std::ostream& out, const ScoreReport& report);

// CSV condition,reference,n,mean_difference,t,df,p.
void WriteTTestCsv(std::ostream& out, const ScoreReport& report);

}  // namespace funcword

#endif  // FUNCWORD_MINIMAL_PAIRS_H_
