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
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cli/commands.h"
#include "cli/conditions.h"
#include "funcword/conllu.h"
#include "funcword/counterfactual.h"
#include "funcword/parallel.h"
#include "funcword/pseudoword.h"

namespace funcword::cli {
namespace {

namespace fs = std::filesystem;

struct GenerateOptions {
  std::string input;
  std::string format = "auto";
  ConditionFlags conditions;
  std::string inventory;
  std::string tables;
  bool records = false;
};

Corpus LoadCorpus(const GenerateOptions& opts, const RunContext& ctx) {
  std::string format = opts.format;
  if (format == "auto") {
    const std::string name = fs::path(opts.input).filename().string();
    const bool conllu = name.find(".conllu") != std::string::npos;
    format = conllu ? "conllu" : "tagged";
  }
  if (format == "conllu") {
    ConlluReadResult read = ReadConlluFile(opts.input, LanguageCodeFromFilename(opts.input));
    if (!read.diagnostics.empty()) {
      *ctx.log << "warning: dropped " << read.diagnostics.size()
               << " malformed sentence(s) from " << opts.input << '\n';
    }
    return CorpusFromTreebank(read.treebank);
  }
  if (format != "tagged") throw InputError("unknown --format " + format);
  std::istringstream in(ReadMaybeGzipped(opts.input));
  try {
    return ReadTaggedText(in);
  } catch (const std::runtime_error& e) {
    throw InputError(opts.input + ": " + e.what());
  }
}

nlohmann::json SummaryJson(const ConditionSummary& s) {
  return {{"condition", ConditionName(s.condition)},
          {"seed", s.seed},
          {"sentences", s.sentence_count},
          {"original_tokens", s.original_token_total},
          {"tokens", s.token_total},
          {"original_function_tokens", s.original_function_token_count},
          {"function_tokens", s.function_token_count},
          {"function_types", s.function_type_count},
          {"content_tokens", s.content_token_count},
          {"tokens_changed", s.tokens_changed},
          {"function_positions_changed", s.function_positions_changed},
          {"sentences_affected", s.sentences_affected},
          {"sentences_with_moved_function_words", s.sentences_with_moved_function_words},
          {"emptied_sentences", s.emptied_sentences},
          {"position_change_ratio", s.position_change_ratio},
          {"affected_sentence_ratio", s.affected_sentence_ratio}};
}

std::string RecordsJsonl(const std::vector<RewriteRecord>& records) {
  std::string out;
  for (const RewriteRecord& r : records) {
    const nlohmann::json line = {{"sentence_index", r.sentence_index},
                                 {"sentence_id", r.sentence_id},
                                 {"condition", ConditionName(r.condition)},
                                 {"original_positions", r.original_positions},
                                 {"rewritten_positions", r.rewritten_positions},
                                 {"emptied", r.emptied}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

void RunGenerate(const GenerateOptions& opts, const RunContext& ctx) {
  nlohmann::json& config = ctx.manifest->config();
  config["input"] = opts.input;
  config["format"] = opts.format;
  config["inventory"] = opts.inventory;
  config["tables"] = opts.tables;
  config["records"] = opts.records;

  const FunctionInventory inventory = LoadInventory(opts.inventory);
  if (!opts.inventory.empty()) ctx.manifest->AddInput(opts.inventory);
  const std::vector<ConditionSpec> specs = BuildSpecs(opts.conditions, ctx.global.seed, inventory, &config);

  ctx.manifest->AddInput(opts.input);
  const Corpus corpus = LoadCorpus(opts, ctx);
  if (corpus.sentences.empty()) throw InputError(opts.input + ": no sentences");
  for (const ConditionSpec& spec : specs) {
    if (RequiresParse(spec.condition) && !corpus.parsed) {
      throw InputError(std::string(ConditionName(spec.condition)) +
                       " needs dependency heads; give a CoNLL-U corpus");
    }
  }

  ConditionTables fixed;
  const bool have_tables = !opts.tables.empty();
  if (have_tables) {
    ctx.manifest->AddInput(opts.tables);
    fixed = LoadTables(opts.tables);
  }

  const SyllableSubstitutionGenerator generator;
  std::vector<ConditionTables> tables(specs.size());
  std::vector<ConditionResult> results(specs.size());
  try {
    ParallelFor(specs.size(), ctx.global.jobs, [&](std::size_t i) {
      tables[i] = have_tables ? fixed : PrepareTables(corpus, specs[i], inventory, generator);
      results[i] = ApplyCondition(corpus, specs[i], inventory, tables[i]);
    });
  } catch (const std::out_of_range& e) {
    // Only reachable when reused tables miss a form of this corpus.
    if (!have_tables) throw;
    throw InputError(opts.tables + " does not cover this corpus: " + e.what());
  }

  ConditionTables merged;
  nlohmann::json summaries = nlohmann::json::array();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const std::string name(ConditionName(specs[i].condition));
    std::string text;
    for (const auto& words : results[i].sentences) {
      text += JoinWords(words);
      text += '\n';
    }
    ctx.WriteOutput("corpora/" + name + ".txt", text);
    if (opts.records) {
      ctx.WriteOutput("records/" + name + ".jsonl", RecordsJsonl(results[i].records));
    }
    summaries.push_back(SummaryJson(results[i].summary));
    MergeTables(tables[i], &merged);
    *ctx.log << name << ": " << results[i].summary.token_total << " tokens, "
             << results[i].summary.function_type_count << " function types\n";
  }
  std::ostringstream tables_json;
  WriteConditionTables(tables_json, merged);
  ctx.WriteOutput("tables.json", tables_json.str());
  ctx.WriteOutput("summary.json", nlohmann::json{{"conditions", summaries}}.dump(2) + "\n");
}

}  // namespace

CLI::App* RegisterGenerate(CLI::App& root, CommandRunner* run) {
  auto opts = std::make_shared<GenerateOptions>();
  CLI::App* cmd =
      root.add_subcommand("generate", "Write counterfactual corpora for each condition");
  cmd->add_option("--input", opts->input, "CoNLL-U (optionally gzipped) or form/UPOS text")
      ->required();
  cmd->add_option("--format", opts->format, "auto, conllu or tagged")
      ->check(CLI::IsMember({"auto", "conllu", "tagged"}))
      ->capture_default_str();
  AddConditionFlags(cmd, &opts->conditions);
  cmd->add_option("--inventory", opts->inventory,
                  "Inventory JSON (default: built-in English list)");
  cmd->add_option("--tables", opts->tables,
                  "Reuse condition tables from an earlier run instead of building them");
  cmd->add_flag("--records", opts->records, "Write per-sentence position records");
  *run = [opts](const RunContext& ctx) { RunGenerate(*opts, ctx); };
  return cmd;
}

}  // namespace funcword::cli
