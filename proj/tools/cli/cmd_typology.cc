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

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "cli/commands.h"
#include "funcword/conllu.h"
#include "funcword/parallel.h"
#include "funcword/stats.h"
#include "funcword/typology.h"

namespace funcword::cli {
namespace {

namespace fs = std::filesystem;

struct TypologyOptions {
  std::vector<std::string> inputs;
  bool no_relaxation = false;
  bool non_transitive = false;
};

bool IsTreebankFile(const fs::path& path) {
  const std::string name = path.filename().string();
  auto ends_with = [&](std::string_view suffix) {
    return name.size() >= suffix.size() &&
           name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".conllu") || ends_with(".conllu.gz");
}

std::vector<fs::path> CollectTreebankFiles(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    const fs::path path(input);
    if (fs::is_directory(path)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::recursive_directory_iterator(path)) {
        if (entry.is_regular_file() && IsTreebankFile(entry.path())) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(path)) {
      files.push_back(path);
    } else {
      throw InputError("no such file or directory: " + input);
    }
  }
  return files;
}

struct LanguageProfile {
  std::string code;
  FrequencyProfile frequency;
  EntropyProfile entropy;
  BoundaryProfile boundary;
  ComplexityProfile complexity;
  std::string error;
};

void RunTypology(const TypologyOptions& opts, const RunContext& ctx) {
  ctx.manifest->config()["inputs"] = opts.inputs;
  ctx.manifest->config()["relaxation"] = !opts.no_relaxation;
  ctx.manifest->config()["transitive"] = !opts.non_transitive;

  const std::vector<fs::path> files = CollectTreebankFiles(opts.inputs);
  if (files.empty()) throw InputError("no treebanks found");

  // Files of one language (e.g. train/dev/test splits) are pooled.
  std::map<std::string, Treebank> languages;
  std::ostringstream diagnostics;
  diagnostics << "file,line,sent_id,message\n";
  for (const fs::path& file : files) {
    ctx.manifest->AddInput(file);
    const std::string code = LanguageCodeFromFilename(file);
    ConlluReadResult read;
    try {
      read = ReadConlluFile(file, code);
    } catch (const ConlluError& e) {
      *ctx.log << "warning: skipping " << file.string() << ": " << e.what() << '\n';
      diagnostics << file.generic_string() << ',' << e.line() << ",,\"" << e.what() << "\"\n";
      continue;
    }
    for (const ConlluDiagnostic& d : read.diagnostics) {
      diagnostics << file.generic_string() << ',' << d.line << ',' << d.sent_id << ",\""
                  << d.message << "\"\n";
    }
    Treebank& bank = languages[code];
    bank.language_code = code;
    for (Sentence& s : read.treebank.sentences) bank.sentences.push_back(std::move(s));
  }

  BoundaryOptions boundary_options;
  boundary_options.relaxation = !opts.no_relaxation;
  boundary_options.transitive = !opts.non_transitive;

  std::vector<LanguageProfile> profiles;
  std::vector<const Treebank*> banks;
  for (const auto& [code, bank] : languages) {
    profiles.emplace_back().code = code;
    banks.push_back(&bank);
  }
  ParallelFor(profiles.size(), ctx.global.jobs, [&](std::size_t i) {
    LanguageProfile& p = profiles[i];
    try {
      p.frequency = ComputeFrequencyProfile(*banks[i]);
    } catch (const std::invalid_argument& e) {
      p.error = e.what();
      return;
    }
    p.entropy = ComputeNeighborEntropy(*banks[i]);
    p.boundary = ComputeBoundaryProfile(*banks[i], boundary_options);
    p.complexity = ComputeComplexityProfile(*banks[i]);
  });
  std::erase_if(profiles, [&](const LanguageProfile& p) {
    if (p.error.empty()) return false;
    *ctx.log << "warning: skipping language " << p.code << ": " << p.error << '\n';
    return true;
  });
  if (profiles.empty()) throw InputError("no parsable treebanks");

  std::ostringstream frequency, entropy, by_tag, boundary, complexity;
  frequency << "language,vocab_size,token_total,type_ratio_function,type_ratio_content,"
               "token_ratio_function,token_ratio_content\n";
  entropy << "language,weighted_function_entropy,weighted_content_entropy\n";
  by_tag << "language,upos,class,frequency,entropy\n";
  boundary << "language,counted_function,boundary_function,function_boundary_ratio,"
              "counted_content,boundary_content,content_boundary_ratio\n";
  complexity << "language,sentences,mean_sentence_length,arcs,mean_dependency_distance\n";

  std::vector<double> function_ratios, content_ratios;
  int entropy_holds = 0, boundary_holds = 0, boundary_languages = 0;
  for (const LanguageProfile& p : profiles) {
    const FrequencyProfile& f = p.frequency;
    frequency << p.code << ',' << f.vocab_size << ',' << f.token_total << ','
              << Fixed(f.type_ratio_function) << ',' << Fixed(f.type_ratio_content) << ','
              << Fixed(f.token_ratio_function) << ',' << Fixed(f.token_ratio_content) << '\n';
    entropy << p.code << ',' << Fixed(p.entropy.weighted_function_entropy) << ','
            << Fixed(p.entropy.weighted_content_entropy) << '\n';
    if (p.entropy.weighted_function_entropy < p.entropy.weighted_content_entropy) {
      ++entropy_holds;
    }
    for (const auto& [tag, h] : p.entropy.per_tag_entropy) {
      const auto freq = p.entropy.tag_frequencies.find(tag);
      by_tag << p.code << ',' << UposName(tag) << ','
             << (IsClosedClass(tag) ? "function" : "content") << ','
             << (freq == p.entropy.tag_frequencies.end() ? 0 : freq->second) << ','
             << Fixed(h) << '\n';
    }
    const BoundaryProfile& b = p.boundary;
    boundary << p.code << ',' << b.counted_function_tokens << ','
             << b.boundary_function_tokens << ',' << Fixed(b.function_boundary_ratio) << ','
             << b.counted_content_tokens << ',' << b.boundary_content_tokens << ','
             << Fixed(b.content_boundary_ratio) << '\n';
    if (b.counted_function_tokens > 0 && b.counted_content_tokens > 0) {
      ++boundary_languages;
      function_ratios.push_back(b.function_boundary_ratio);
      content_ratios.push_back(b.content_boundary_ratio);
      if (b.function_boundary_ratio > b.content_boundary_ratio) ++boundary_holds;
    }
    complexity << p.code << ',' << p.complexity.sentence_count << ','
               << Fixed(p.complexity.mean_sentence_length) << ','
               << p.complexity.arc_count << ','
               << Fixed(p.complexity.mean_dependency_distance) << '\n';
  }

  nlohmann::json summary = {
      {"languages", profiles.size()},
      {"entropy_function_below_content", entropy_holds},
      {"boundary_languages", boundary_languages},
      {"boundary_function_above_content", boundary_holds},
  };
  if (!function_ratios.empty()) {
    summary["median_function_boundary_ratio"] = Median(function_ratios);
    summary["median_content_boundary_ratio"] = Median(content_ratios);
  }

  ctx.WriteOutput("frequency.csv", frequency.str());
  ctx.WriteOutput("entropy.csv", entropy.str());
  ctx.WriteOutput("entropy_by_tag.csv", by_tag.str());
  ctx.WriteOutput("boundary.csv", boundary.str());
  ctx.WriteOutput("complexity.csv", complexity.str());
  ctx.WriteOutput("diagnostics.csv", diagnostics.str());
  ctx.WriteOutput("summary.json", summary.dump(2) + "\n");
  *ctx.log << "typology: " << profiles.size() << " language(s)\n";
}

}  // namespace

CLI::App* RegisterTypology(CLI::App& root, CommandRunner* run) {
  auto opts = std::make_shared<TypologyOptions>();
  CLI::App* cmd = root.add_subcommand(
      "typology", "Frequency, entropy, boundary and complexity profiles per language");
  cmd->add_option("inputs", opts->inputs, "CoNLL-U files or directories (.conllu, .conllu.gz)")
      ->required();
  cmd->add_flag("--no-relaxation", opts->no_relaxation,
                "Count only strict subtree-periphery positions as boundaries");
  cmd->add_flag("--non-transitive", opts->non_transitive,
                "Relax across a single adjacent function word only");
  *run = [opts](const RunContext& ctx) { RunTypology(*opts, ctx); };
  return cmd;
}

}  // namespace funcword::cli
