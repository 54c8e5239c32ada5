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

#include "cli/conditions.h"

#include <set>
#include <sstream>

#include "cli/common.h"

namespace funcword::cli {

void AddConditionFlags(CLI::App* cmd, ConditionFlags* flags) {
  cmd->add_option("--conditions", flags->conditions,
                  "Comma-separated conditions (default: all seven)")
      ->delimiter(',');
  cmd->add_option("--representative", flags->representatives,
                  "FiveFunction representative as CAT=form; repeatable");
  cmd->add_option("--fan-out", flags->fan_out, "MoreFunction pseudowords per function form")
      ->capture_default_str();
  cmd->add_option("--bigram-cap", flags->bigram_cap,
                  "BigramDep: most following-word types with a dedicated function word");
}

std::vector<ConditionSpec> BuildSpecs(const ConditionFlags& flags, std::uint64_t seed,
                                      const FunctionInventory& inventory,
                                      nlohmann::json* config) {
  Representatives representatives;
  for (const std::string& entry : flags.representatives) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos || eq + 1 == entry.size()) {
      throw InputError("--representative expects CAT=form, got " + entry);
    }
    const auto category = ParseCategory(entry.substr(0, eq));
    if (!category) throw InputError("unknown category in --representative " + entry);
    const std::string form = LowercaseForm(entry.substr(eq + 1));
    if (!inventory.Contains(form, *category)) {
      throw InputError("--representative " + entry + ": '" + form + "' is not a " +
                       std::string(CategoryName(*category)) + " form of the inventory");
    }
    representatives[*category] = form;
  }
  if (flags.fan_out < 1) throw InputError("--fan-out must be at least 1");

  std::vector<Condition> conditions;
  if (flags.conditions.empty()) {
    conditions.assign(kAllConditions.begin(), kAllConditions.end());
  } else {
    std::set<Condition> seen;
    for (const std::string& name : flags.conditions) {
      const auto c = ParseCondition(name);
      if (!c) throw InputError("unknown condition " + name);
      if (seen.insert(*c).second) conditions.push_back(*c);
    }
  }

  std::vector<ConditionSpec> specs;
  nlohmann::json names = nlohmann::json::array();
  for (Condition c : conditions) {
    ConditionSpec spec;
    spec.condition = c;
    spec.seed = seed;
    spec.representatives = representatives;
    spec.fan_out = flags.fan_out;
    spec.bigram_vocab_cap = flags.bigram_cap;
    specs.push_back(spec);
    names.push_back(ConditionName(c));
  }
  (*config)["conditions"] = names;
  nlohmann::json reps = nlohmann::json::object();
  for (const auto& [category, form] : representatives) reps[std::string(CategoryName(category))] = form;
  (*config)["representatives"] = reps;
  (*config)["fan_out"] = flags.fan_out;
  (*config)["bigram_cap"] =
      flags.bigram_cap ? nlohmann::json(*flags.bigram_cap) : nlohmann::json(nullptr);
  return specs;
}

ConditionTables LoadTables(const std::string& path) {
  std::istringstream in(ReadFileOrThrow(path));
  try {
    return ReadConditionTables(in);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace funcword::cli
