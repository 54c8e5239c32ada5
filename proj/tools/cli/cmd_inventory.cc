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
#include <vector>

#include "cli/commands.h"
#include "funcword/conllu.h"
#include "funcword/inventory.h"

namespace funcword::cli {
namespace {

struct InventoryOptions {
  std::vector<std::string> treebanks;
  std::int64_t min_count = 1;
  std::vector<std::string> categories;
  std::string overrides;
  bool builtin_english = false;
};

void RunInventory(const InventoryOptions& opts, const RunContext& ctx) {
  nlohmann::json& config = ctx.manifest->config();
  config["treebanks"] = opts.treebanks;
  config["min_count"] = opts.min_count;
  config["categories"] = opts.categories;
  config["overrides"] = opts.overrides;
  config["builtin_english"] = opts.builtin_english;

  if (opts.builtin_english == !opts.treebanks.empty()) {
    throw InputError("give either treebank files or --builtin-english");
  }
  FunctionInventory inventory;
  if (opts.builtin_english) {
    inventory = FunctionInventory::English();
  } else {
    std::set<FunctionCategory> categories;
    for (const std::string& name : opts.categories) {
      const auto c = ParseCategory(name);
      if (!c) throw InputError("unknown category " + name);
      categories.insert(*c);
    }
    if (categories.empty()) {
      categories.insert(kAllFunctionCategories.begin(), kAllFunctionCategories.end());
    }
    if (opts.min_count < 1) throw InputError("--min-count must be at least 1");
    std::vector<Treebank> banks;
    for (const std::string& path : opts.treebanks) {
      ctx.manifest->AddInput(path);
      ConlluReadResult read = ReadConlluFile(path, LanguageCodeFromFilename(path));
      if (!read.diagnostics.empty()) {
        *ctx.log << "warning: " << path << ": dropped " << read.diagnostics.size()
                 << " malformed sentence(s)\n";
      }
      banks.push_back(std::move(read.treebank));
    }
    std::vector<const Treebank*> pointers;
    for (const Treebank& b : banks) pointers.push_back(&b);
    inventory = ExtractInventory(pointers, categories, opts.min_count);
  }
  if (!opts.overrides.empty()) {
    ctx.manifest->AddInput(opts.overrides);
    std::istringstream in(ReadFileOrThrow(opts.overrides));
    try {
      inventory = ApplyOverrides(inventory, ParseOverrides(in));
    } catch (const std::runtime_error& e) {
      throw InputError(opts.overrides + ": " + e.what());
    }
  }
  std::ostringstream out;
  WriteInventory(out, inventory);
  ctx.WriteOutput("inventory.json", out.str());
  *ctx.log << "inventory: " << inventory.DistinctForms().size() << " forms, "
           << inventory.EntryCount() << " (form, category) pairs\n";
}

}  // namespace

CLI::App* RegisterInventory(CLI::App& root, CommandRunner* run) {
  auto opts = std::make_shared<InventoryOptions>();
  CLI::App* cmd =
      root.add_subcommand("inventory", "Extract a function-word inventory from treebanks");
  cmd->add_option("treebanks", opts->treebanks, "CoNLL-U files to count");
  cmd->add_option("--min-count", opts->min_count, "Minimum joint (form, category) count")
      ->capture_default_str();
  cmd->add_option("--categories", opts->categories, "Subset of DET,ADP,CCONJ,SCONJ,AUX")
      ->delimiter(',');
  cmd->add_option("--overrides", opts->overrides, "Override file of '+ form CAT' lines");
  cmd->add_flag("--builtin-english", opts->builtin_english,
                "Write the built-in English inventory instead of extracting one");
  *run = [opts](const RunContext& ctx) { RunInventory(*opts, ctx); };
  return cmd;
}

}  // namespace funcword::cli
