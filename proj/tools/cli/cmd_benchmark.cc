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

#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cli/commands.h"
#include "cli/conditions.h"
#include "funcword/conllu.h"
#include "funcword/minimal_pairs.h"
#include "funcword/pseudoword.h"

namespace funcword::cli {
namespace {

struct BenchmarkOptions {
  std::string suite;
  std::string parses;
  ConditionFlags conditions;
  std::string tables;
  std::string corpus;
  std::string inventory;
  std::string exclude;
  std::vector<std::string> outcomes;  // COND=FILE
  std::string baseline = "Natural";
};

Suite LoadSuite(const std::string& path) {
  std::istringstream in(ReadFileOrThrow(path));
  Suite suite;
  try {
    suite = ReadSuite(in);
  } catch (const std::runtime_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (suite.empty()) throw InputError(path + ": no pairs");
  if (auto id = FindDegeneratePair(suite)) {
    throw InputError(path + ": pair " + *id + " has identical good and bad sentences");
  }
  return suite;
}

std::vector<std::string> LoadExclusions(const std::string& path) {
  std::istringstream in(ReadFileOrThrow(path));
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string name;
    if (words >> name) names.push_back(name);
  }
  return names;
}

// Tables come from, in order of preference: a tables file from an earlier
// generate run, a training corpus, or the suite's own parses.
std::map<std::string, ConditionTables> ResolveTables(const BenchmarkOptions& opts,
                                                     const std::vector<ConditionSpec>& specs,
                                                     const Treebank* parses,
                                                     const FunctionInventory& inventory,
                                                     const RunContext& ctx) {
  std::map<std::string, ConditionTables> tables;
  if (!opts.tables.empty()) {
    ctx.manifest->AddInput(opts.tables);
    const ConditionTables loaded = LoadTables(opts.tables);
    for (const ConditionSpec& s : specs) tables[std::string(ConditionName(s.condition))] = loaded;
    return tables;
  }
  Corpus corpus;
  if (!opts.corpus.empty()) {
    ctx.manifest->AddInput(opts.corpus);
    corpus = CorpusFromTreebank(
        ReadConlluFile(opts.corpus, LanguageCodeFromFilename(opts.corpus)).treebank);
  } else if (parses != nullptr) {
    corpus = CorpusFromTreebank(*parses);
  }
  const SyllableSubstitutionGenerator generator;
  for (const ConditionSpec& s : specs) {
    if (s.condition == Condition::kNatural || s.condition == Condition::kNoFunction ||
        s.condition == Condition::kRandomDep || s.condition == Condition::kWithinBoundary) {
      continue;
    }
    if (corpus.sentences.empty()) {
      throw InputError(std::string(ConditionName(s.condition)) +
                       " needs --tables, --corpus or --parses");
    }
    tables[std::string(ConditionName(s.condition))] =
        PrepareTables(corpus, s, inventory, generator);
  }
  return tables;
}

std::vector<std::pair<std::string, Outcomes>> LoadOutcomes(const BenchmarkOptions& opts,
                                                           const RunContext& ctx) {
  std::vector<std::pair<std::string, Outcomes>> all;
  std::set<std::string> seen;
  for (const std::string& entry : opts.outcomes) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
      throw InputError("--outcomes expects CONDITION=FILE, got " + entry);
    }
    const std::string condition = entry.substr(0, eq);
    const std::string path = entry.substr(eq + 1);
    if (!seen.insert(condition).second) throw InputError("duplicate outcomes for " + condition);
    ctx.manifest->AddInput(path);
    std::istringstream in(ReadFileOrThrow(path));
    try {
      all.emplace_back(condition, ReadOutcomes(in));
    } catch (const std::runtime_error& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  return all;
}

void RunBenchmark(const BenchmarkOptions& opts, const RunContext& ctx) {
  nlohmann::json& config = ctx.manifest->config();
  config["suite"] = opts.suite;
  config["parses"] = opts.parses;
  config["tables"] = opts.tables;
  config["corpus"] = opts.corpus;
  config["inventory"] = opts.inventory;
  config["exclude"] = opts.exclude;
  config["outcomes"] = opts.outcomes;
  config["baseline"] = opts.baseline;

  const FunctionInventory inventory = LoadInventory(opts.inventory);
  if (!opts.inventory.empty()) ctx.manifest->AddInput(opts.inventory);
  const std::vector<ConditionSpec> specs = BuildSpecs(opts.conditions, ctx.global.seed, inventory, &config);

  ctx.manifest->AddInput(opts.suite);
  const Suite source = LoadSuite(opts.suite);

  Treebank parse_bank;
  ParseIndex parses;
  if (!opts.parses.empty()) {
    ctx.manifest->AddInput(opts.parses);
    ConlluReadResult read = ReadConlluFile(opts.parses, "");
    if (!read.diagnostics.empty()) {
      *ctx.log << "warning: dropped " << read.diagnostics.size()
               << " malformed parse(s); their pairs will be removed\n";
    }
    parse_bank = std::move(read.treebank);
    parses = IndexParses(parse_bank);
  } else {
    for (const ConditionSpec& s : specs) {
      if (s.condition != Condition::kNatural) {
        throw InputError(std::string(ConditionName(s.condition)) + " needs --parses");
      }
    }
  }

  const auto tables =
      ResolveTables(opts, specs, opts.parses.empty() ? nullptr : &parse_bank, inventory, ctx);
  PipelineOptions pipeline;
  pipeline.jobs = ctx.global.jobs;
  if (!opts.exclude.empty()) {
    ctx.manifest->AddInput(opts.exclude);
    pipeline.exclusions = LoadExclusions(opts.exclude);
  }
  FilterResult filtered;
  try {
    filtered = RunBenchmarkPipeline(source, specs, parses, inventory, tables, pipeline);
  } catch (const std::out_of_range& e) {
    throw InputError("condition tables do not cover the suite: " + std::string(e.what()));
  }

  for (const auto& [name, suite] : filtered.suites) {
    std::ostringstream out;
    WriteSuite(out, suite);
    ctx.WriteOutput("suites/" + name + ".jsonl", out.str());
  }
  std::ostringstream report;
  WriteFilterReport(report, filtered.report);
  ctx.WriteOutput("filter_report.json", report.str());
  *ctx.log << "benchmark: " << filtered.report.surviving << " of "
           << filtered.report.source_count << " pairs survive filtering\n";

  const auto outcomes = LoadOutcomes(opts, ctx);
  if (outcomes.empty()) return;
  const Suite& surviving = filtered.suites.begin()->second;
  std::set<std::string> ids;
  for (const MinimalPair& p : surviving) ids.insert(p.pair_id);
  for (const auto& [condition, results] : outcomes) {
    std::set<std::string> got;
    for (const auto& [id, correct] : results) got.insert(id);
    if (got != ids) {
      throw InputError("outcomes for " + condition + " cover " + std::to_string(got.size()) +
                       " pair ids, but the filtered suite has " +
                       std::to_string(ids.size()) + " (id mismatch)");
    }
  }
  const ScoreReport scores = ComputeScoreReport(surviving, outcomes, opts.baseline);
  std::ostringstream scores_csv, ttest_csv;
  WriteScoreCsv(scores_csv, scores);
  WriteTTestCsv(ttest_csv, scores);
  ctx.WriteOutput("scores.csv", scores_csv.str());
  ctx.WriteOutput("ttest.csv", ttest_csv.str());
}

}  // namespace

CLI::App* RegisterBenchmark(CLI::App& root, CommandRunner* run) {
  auto opts = std::make_shared<BenchmarkOptions>();
  CLI::App* cmd = root.add_subcommand(
      "benchmark", "Transform and filter a minimal-pair suite; score model outcomes");
  cmd->add_option("--suite", opts->suite, "Minimal pairs as JSON lines")->required();
  cmd->add_option("--parses", opts->parses,
                  "CoNLL-U parses with sent_id <pair_id>.good / <pair_id>.bad");
  AddConditionFlags(cmd, &opts->conditions);
  cmd->add_option("--tables", opts->tables, "Condition tables written by generate");
  cmd->add_option("--corpus", opts->corpus, "Training corpus to build condition tables from");
  cmd->add_option("--inventory", opts->inventory,
                  "Inventory JSON (default: built-in English list)");
  cmd->add_option("--exclude", opts->exclude,
                  "Subcategories to drop, one per line (default: built-in list)");
  cmd->add_option("--outcomes", opts->outcomes,
                  "Model outcomes as CONDITION=FILE (JSON lines); repeatable");
  cmd->add_option("--baseline", opts->baseline, "Condition the deltas are taken against")
      ->capture_default_str();
  *run = [opts](const RunContext& ctx) { RunBenchmark(*opts, ctx); };
  return cmd;
}

}  // namespace funcword::cli
