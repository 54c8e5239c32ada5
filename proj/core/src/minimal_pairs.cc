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

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "funcword/parallel.h"
#include "funcword/rng.h"

namespace funcword {
namespace {

using nlohmann::json;

constexpr std::uint64_t kSuiteRandomDepStream = 0x51D3;

std::runtime_error LineError(std::size_t line, const std::string& message) {
  return std::runtime_error("line " + std::to_string(line) + ": " + message);
}

std::string RequireString(const json& obj, const char* field, std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) {
    throw LineError(line, std::string("missing string field '") + field + "'");
  }
  return it->get<std::string>();
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> FunctionForms(const Sentence& sentence,
                                       const FunctionInventory& inventory) {
  const std::vector<bool> flags = FunctionFlags(sentence, inventory);
  std::vector<std::string> forms;
  for (const Token& t : sentence.tokens()) {
    if (flags[t.index - 1]) forms.push_back(LowercaseForm(t.form));
  }
  return forms;
}

// Deals exactly the sentence's slot count from `forms`, cycling if needed.
// With nothing to deal, the sentence keeps its own forms.
Rewrite DealCyclic(const Sentence& sentence, const FunctionInventory& inventory,
                   const std::vector<std::string>& forms) {
  std::vector<std::string> own = FunctionForms(sentence, inventory);
  if (!forms.empty()) {
    for (std::size_t k = 0; k < own.size(); ++k) own[k] = forms[k % forms.size()];
  }
  return DealFunctionForms({sentence}, inventory, own).front();
}

Rewrite RewriteMember(const Sentence& sentence, const ConditionSpec& spec,
                      const FunctionInventory& inventory,
                      const ConditionTables& tables, std::uint64_t pair_key) {
  switch (spec.condition) {
    case Condition::kNatural:
      return RewriteNatural(sentence, inventory);
    case Condition::kNoFunction:
      return RewriteNoFunction(sentence, inventory);
    case Condition::kFiveFunction:
      return RewriteFiveFunction(sentence, inventory, tables.representatives);
    case Condition::kMoreFunction:
      return RewriteMoreFunction(sentence, inventory, tables.pseudowords, spec.seed,
                                 pair_key);
    case Condition::kBigramDep:
      return RewriteBigramDep(sentence, inventory, tables.bigram);
    case Condition::kWithinBoundary:
      return RewriteWithinBoundary(sentence, inventory);
    case Condition::kRandomDep:
      break;
  }
  throw std::logic_error("RandomDep is dealt suite-wide");
}

std::string FormatDouble(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

double Percent(std::size_t correct, std::size_t total) {
  return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

struct Tally {
  std::size_t correct = 0;
  std::size_t total = 0;
  void Add(bool ok) {
    correct += ok;
    ++total;
  }
};

const ConditionScores& FindScores(const ScoreReport& report,
                                  const std::string& condition) {
  for (const ConditionScores& s : report.scores) {
    if (s.condition == condition) return s;
  }
  throw std::invalid_argument("no scores for condition '" + condition + "'");
}

}  // namespace

Suite ReadSuite(std::istream& in) {
  Suite suite;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw LineError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw LineError(line_no, "expected a JSON object");
    MinimalPair p;
    p.pair_id = RequireString(obj, "pair_id", line_no);
    p.phenomenon = RequireString(obj, "phenomenon", line_no);
    p.subcategory = RequireString(obj, "subcategory", line_no);
    p.good = RequireString(obj, "good", line_no);
    p.bad = RequireString(obj, "bad", line_no);
    if (p.pair_id.empty()) throw LineError(line_no, "empty pair_id");
    if (!seen.insert(p.pair_id).second) {
      throw LineError(line_no, "duplicate pair_id '" + p.pair_id + "'");
    }
    suite.push_back(std::move(p));
  }
  return suite;
}

void WriteSuite(std::ostream& out, const Suite& suite) {
  for (const MinimalPair& p : suite) {
    json obj = {{"pair_id", p.pair_id},
                {"phenomenon", p.phenomenon},
                {"subcategory", p.subcategory},
                {"good", p.good},
                {"bad", p.bad}};
    out << obj.dump() << '\n';
  }
}

std::optional<std::string> FindDegeneratePair(const Suite& suite) {
  for (const MinimalPair& p : suite) {
    if (p.good == p.bad) return p.pair_id;
  }
  return std::nullopt;
}

const std::vector<std::string>& DefaultFunctionCriticalSubcategories() {
  static const std::vector<std::string> kList = {
      "determiner_noun_agreement_1",
      "determiner_noun_agreement_2",
      "determiner_noun_agreement_irregular_1",
      "determiner_noun_agreement_irregular_2",
      "determiner_noun_agreement_with_adjective_1",
      "determiner_noun_agreement_with_adjective_2",
      "determiner_noun_agreement_with_adj_irregular_1",
      "determiner_noun_agreement_with_adj_irregular_2",
      "matrix_question_npi_licensor_present",
      "existential_there_quantifiers_1",
      "existential_there_quantifiers_2",
      "superlative_quantifiers_1",
      "superlative_quantifiers_2",
  };
  return kList;
}

DropCriticalResult DropFunctionCritical(const Suite& suite,
                                        const std::vector<std::string>& exclusions) {
  const std::set<std::string> excluded(exclusions.begin(), exclusions.end());
  std::set<std::string> present;
  DropCriticalResult result;
  for (const MinimalPair& p : suite) {
    if (excluded.count(p.subcategory)) {
      present.insert(p.subcategory);
    } else {
      result.suite.push_back(p);
    }
  }
  std::set<std::string> listed;
  for (const std::string& name : exclusions) {
    if (!listed.insert(name).second) continue;
    (present.count(name) ? result.removed_subcategories
                         : result.unknown_subcategories)
        .push_back(name);
  }
  return result;
}

std::string NormalizeForComparison(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

DropIdenticalResult DropIdentical(const Suite& suite) {
  DropIdenticalResult result;
  for (const MinimalPair& p : suite) {
    if (NormalizeForComparison(p.good) == NormalizeForComparison(p.bad)) {
      result.removed.push_back(p.pair_id);
    } else {
      result.suite.push_back(p);
    }
  }
  return result;
}

ParseIndex IndexParses(const Treebank& treebank) {
  ParseIndex index;
  for (const Sentence& s : treebank.sentences) {
    if (!index.emplace(s.sent_id(), s).second) {
      throw std::invalid_argument("duplicate sent_id '" + s.sent_id() + "'");
    }
  }
  return index;
}

SuiteTransform TransformSuite(const Suite& suite, const ConditionSpec& spec,
                              const ParseIndex& parses,
                              const FunctionInventory& inventory,
                              const ConditionTables& tables, int jobs) {
  SuiteTransform result;
  if (spec.condition == Condition::kNatural) {
    result.suite = suite;
    return result;
  }
  struct Members {
    const MinimalPair* pair;
    const Sentence* good;
    const Sentence* bad;
  };
  std::vector<Members> usable;
  for (const MinimalPair& p : suite) {
    auto g = parses.find(p.pair_id + ".good");
    auto b = parses.find(p.pair_id + ".bad");
    if (g == parses.end() || b == parses.end()) {
      result.missing_parse.push_back(p.pair_id);
      continue;
    }
    usable.push_back({&p, &g->second, &b->second});
  }

  // RandomDep: one suite-wide deck of good-member function forms.
  std::vector<std::string> deck;
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> lengths;
  if (spec.condition == Condition::kRandomDep) {
    for (const Members& m : usable) {
      std::vector<std::string> forms = FunctionForms(*m.good, inventory);
      offsets.push_back(deck.size());
      lengths.push_back(forms.size());
      deck.insert(deck.end(), forms.begin(), forms.end());
    }
    Rng rng(MixSeed(spec.seed, {kSuiteRandomDepStream}));
    rng.Shuffle(std::span<std::string>(deck));
  }

  result.suite.resize(usable.size());
  ParallelFor(usable.size(), jobs, [&](std::size_t i) {
    const Members& m = usable[i];
    MinimalPair out = *m.pair;
    if (spec.condition == Condition::kRandomDep) {
      const std::vector<std::string> slice(
          deck.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
          deck.begin() + static_cast<std::ptrdiff_t>(offsets[i] + lengths[i]));
      out.good = JoinWords(DealFunctionForms({*m.good}, inventory, slice).front().words);
      out.bad = JoinWords(DealCyclic(*m.bad, inventory, slice).words);
    } else {
      const std::uint64_t key = HashString(m.pair->pair_id);
      out.good = JoinWords(RewriteMember(*m.good, spec, inventory, tables, key).words);
      out.bad = JoinWords(RewriteMember(*m.bad, spec, inventory, tables, key).words);
    }
    result.suite[i] = std::move(out);
  });
  return result;
}

std::map<std::string, Suite> IntersectionFilter(
    const std::map<std::string, Suite>& suites, const Suite& source) {
  std::unordered_set<std::string> source_ids;
  for (const MinimalPair& p : source) source_ids.insert(p.pair_id);

  std::map<std::string, std::unordered_map<std::string, const MinimalPair*>> by_id;
  for (const auto& [condition, suite] : suites) {
    auto& ids = by_id[condition];
    for (const MinimalPair& p : suite) {
      if (!source_ids.count(p.pair_id)) {
        throw std::invalid_argument("condition '" + condition + "' holds pair '" +
                                    p.pair_id + "' that is not in the source suite");
      }
      ids.emplace(p.pair_id, &p);
    }
  }

  std::map<std::string, Suite> out;
  for (const auto& [condition, suite] : suites) out[condition];
  for (const MinimalPair& p : source) {
    bool everywhere = true;
    for (const auto& [condition, ids] : by_id) {
      if (!ids.count(p.pair_id)) {
        everywhere = false;
        break;
      }
    }
    if (!everywhere) continue;
    for (const auto& [condition, ids] : by_id) {
      out[condition].push_back(*ids.at(p.pair_id));
    }
  }
  return out;
}

FilterResult FilterTransformed(
    const Suite& retained, const std::map<std::string, SuiteTransform>& transformed) {
  if (transformed.empty()) {
    throw std::invalid_argument("filtering needs at least one condition");
  }
  FilterResult result;
  FilterReport& report = result.report;
  report.retained_count = retained.size();

  std::map<std::string, Suite> kept;
  for (const auto& [condition, t] : transformed) {
    report.removed_missing_parse[condition] = t.missing_parse;
    DropIdenticalResult dropped = DropIdentical(t.suite);
    report.removed_identical[condition] = std::move(dropped.removed);
    kept[condition] = std::move(dropped.suite);
  }
  result.suites = IntersectionFilter(kept, retained);

  const Suite& any = result.suites.begin()->second;
  std::unordered_set<std::string> surviving;
  for (const MinimalPair& p : any) surviving.insert(p.pair_id);
  for (const MinimalPair& p : retained) {
    if (!surviving.count(p.pair_id)) report.removed_by_intersection.push_back(p.pair_id);
  }
  report.surviving = any.size();
  return result;
}

FilterResult RunBenchmarkPipeline(const Suite& source,
                                  const std::vector<ConditionSpec>& specs,
                                  const ParseIndex& parses,
                                  const FunctionInventory& inventory,
                                  const std::map<std::string, ConditionTables>& tables,
                                  const PipelineOptions& options) {
  DropCriticalResult step1 = DropFunctionCritical(source, options.exclusions);
  std::map<std::string, SuiteTransform> transformed;
  const ConditionTables empty;
  for (const ConditionSpec& spec : specs) {
    const std::string name(ConditionName(spec.condition));
    if (transformed.count(name)) {
      throw std::invalid_argument("condition '" + name + "' requested twice");
    }
    auto it = tables.find(name);
    transformed[name] =
        TransformSuite(step1.suite, spec, parses, inventory,
                       it == tables.end() ? empty : it->second, options.jobs);
  }
  FilterResult result = FilterTransformed(step1.suite, transformed);
  result.report.source_count = source.size();
  result.report.removed_function_critical = std::move(step1.removed_subcategories);
  result.report.unknown_exclusions = std::move(step1.unknown_subcategories);
  return result;
}

void WriteFilterReport(std::ostream& out, const FilterReport& report) {
  json obj = {{"source_count", report.source_count},
              {"removed_function_critical", report.removed_function_critical},
              {"unknown_exclusions", report.unknown_exclusions},
              {"retained_count", report.retained_count},
              {"removed_missing_parse", report.removed_missing_parse},
              {"removed_identical", report.removed_identical},
              {"removed_by_intersection", report.removed_by_intersection},
              {"surviving", report.surviving}};
  out << obj.dump(2) << '\n';
}

Outcomes ReadOutcomes(std::istream& in) {
  Outcomes outcomes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw LineError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw LineError(line_no, "expected a JSON object");
    const std::string id = RequireString(obj, "pair_id", line_no);
    bool correct;
    if (auto it = obj.find("correct"); it != obj.end()) {
      if (!it->is_boolean()) throw LineError(line_no, "'correct' must be boolean");
      correct = it->get<bool>();
    } else {
      auto g = obj.find("good_logprob");
      auto b = obj.find("bad_logprob");
      if (g == obj.end() || b == obj.end() || !g->is_number() || !b->is_number()) {
        throw LineError(line_no, "needs 'correct' or both log-probabilities");
      }
      correct = g->get<double>() > b->get<double>();
    }
    if (!outcomes.emplace(id, correct).second) {
      throw LineError(line_no, "duplicate pair_id '" + id + "'");
    }
  }
  return outcomes;
}

void WriteOutcomeRecords(std::ostream& out, const std::vector<OutcomeRecord>& records) {
  for (const OutcomeRecord& r : records) {
    out << json{{"pair_id", r.pair_id},
                {"good_logprob", r.good_logprob},
                {"bad_logprob", r.bad_logprob},
                {"correct", r.correct}}
               .dump()
        << '\n';
  }
}

const std::vector<std::string>& GroupColumns() {
  static const std::vector<std::string> kColumns = {
      "S-V Agr", "Irregular", "NPI",     "Island",  "Filler.Gap",
      "Ellipsis", "Ctrl.Rais", "Binding", "Arg.Str", "Ana.Agr"};
  return kColumns;
}

std::optional<std::string> GroupColumnFor(std::string_view phenomenon) {
  static const std::map<std::string, std::string, std::less<>> kTerms = {
      {"subject_verb_agreement", "S-V Agr"},
      {"irregular_forms", "Irregular"},
      {"npi_licensing", "NPI"},
      {"island_effects", "Island"},
      {"filler_gap_dependency", "Filler.Gap"},
      {"ellipsis", "Ellipsis"},
      {"control_raising", "Ctrl.Rais"},
      {"binding", "Binding"},
      {"argument_structure", "Arg.Str"},
      {"anaphor_agreement", "Ana.Agr"},
  };
  if (auto it = kTerms.find(phenomenon); it != kTerms.end()) return it->second;
  for (const std::string& column : GroupColumns()) {
    if (column == phenomenon) return column;
  }
  return std::nullopt;
}

ScoreReport ComputeScoreReport(
    const Suite& suite, const std::vector<std::pair<std::string, Outcomes>>& outcomes,
    const std::string& baseline) {
  if (outcomes.empty()) throw std::invalid_argument("no outcomes to score");
  std::unordered_map<std::string, const MinimalPair*> pairs;
  for (const MinimalPair& p : suite) pairs.emplace(p.pair_id, &p);

  const Outcomes& first = outcomes.front().second;
  if (first.empty()) throw std::invalid_argument("outcome sets are empty");
  for (const auto& [condition, o] : outcomes) {
    if (o.size() != first.size() ||
        !std::equal(o.begin(), o.end(), first.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
      throw std::invalid_argument("condition '" + condition +
                                  "' covers a different pair id set");
    }
  }
  for (const auto& [id, ok] : first) {
    (void)ok;
    if (!pairs.count(id)) {
      throw std::invalid_argument("outcome pair '" + id + "' is not in the suite");
    }
  }

  ScoreReport report;
  report.baseline = baseline;
  bool have_baseline = false;
  for (const auto& [condition, o] : outcomes) {
    have_baseline |= condition == baseline;
    Tally overall;
    std::map<std::string, Tally> groups;
    std::map<std::string, Tally> subcategories;
    for (const auto& [id, ok] : o) {
      const MinimalPair& p = *pairs.at(id);
      overall.Add(ok);
      subcategories[p.subcategory].Add(ok);
      if (auto column = GroupColumnFor(p.phenomenon)) groups[*column].Add(ok);
    }
    ConditionScores s;
    s.condition = condition;
    s.pair_count = overall.total;
    s.overall = Percent(overall.correct, overall.total);
    for (const auto& [name, t] : groups) s.groups[name] = Percent(t.correct, t.total);
    for (const auto& [name, t] : subcategories) {
      s.subcategories[name] = Percent(t.correct, t.total);
    }
    report.scores.push_back(std::move(s));
  }
  if (!have_baseline) {
    throw std::invalid_argument("baseline condition '" + baseline + "' has no outcomes");
  }

  const ConditionScores& base = FindScores(report, baseline);
  for (const ConditionScores& s : report.scores) {
    if (s.condition == baseline) continue;
    ScoreComparison c;
    c.condition = s.condition;
    c.overall_delta = s.overall - base.overall;
    for (const auto& [name, value] : s.groups) {
      c.group_deltas[name] = value - base.groups.at(name);
    }
    std::vector<double> a, b;
    for (const auto& [name, value] : s.subcategories) {
      a.push_back(value);
      b.push_back(base.subcategories.at(name));
    }
    if (a.size() >= 2) {
      c.ttest = PairedTTest(a, b);
      c.ttest_defined = true;
    }
    report.comparisons.push_back(std::move(c));
  }
  return report;
}

double ScoreDelta(const ScoreReport& report, const std::string& condition,
                  const std::string& reference) {
  return FindScores(report, condition).overall - FindScores(report, reference).overall;
}

void WriteScoreCsv(std::ostream& out, const ScoreReport& report) {
  out << "condition,row,Overall";
  for (const std::string& column : GroupColumns()) out << ',' << column;
  out << '\n';
  for (const ConditionScores& s : report.scores) {
    out << s.condition << ",accuracy," << FormatOneDecimal(s.overall);
    for (const std::string& column : GroupColumns()) {
      out << ',';
      if (auto it = s.groups.find(column); it != s.groups.end()) {
        out << FormatOneDecimal(it->second);
      }
    }
    out << '\n';
  }
  for (const ScoreComparison& c : report.comparisons) {
    out << c.condition << ",delta," << FormatOneDecimal(c.overall_delta, true);
    for (const std::string& column : GroupColumns()) {
      out << ',';
      if (auto it = c.group_deltas.find(column); it != c.group_deltas.end()) {
        out << FormatOneDecimal(it->second, true);
      }
    }
    out << '\n';
  }
}

void WriteTTestCsv(std::ostream& out, const ScoreReport& report) {
  out << "condition,reference,n,mean_difference,t,df,p\n";
  for (const ScoreComparison& c : report.comparisons) {
    if (!c.ttest_defined) continue;
    const TTestResult& t = c.ttest;
    out << c.condition << ',' << report.baseline << ',' << t.n << ','
        << FormatDouble(t.mean_difference) << ',' << FormatDouble(t.t) << ','
        << FormatDouble(t.df) << ',' << FormatDouble(t.p) << '\n';
  }
}

}  // namespace funcword
