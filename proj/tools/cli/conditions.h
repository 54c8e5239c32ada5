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

#ifndef FUNCWORD_TOOLS_CLI_CONDITIONS_H_
#define FUNCWORD_TOOLS_CLI_CONDITIONS_H_

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "funcword/counterfactual.h"

namespace funcword::cli {

// Condition selection and parameters shared by generate and benchmark.
struct ConditionFlags {
  std::vector<std::string> conditions;  // empty means all seven
  std::vector<std::string> representatives;  // CAT=form
  int fan_out = 10;
  std::optional<std::size_t> bigram_cap;
};

void AddConditionFlags(CLI::App* cmd, ConditionFlags* flags);

// Validates the flags, records them in `config` and returns one spec per
// condition in the given order. Representatives must be inventory forms of
// their category. Throws InputError.
std::vector<ConditionSpec> BuildSpecs(const ConditionFlags& flags, std::uint64_t seed,
                                      const FunctionInventory& inventory,
                                      nlohmann::json* config);

// Throws InputError on unreadable or malformed files.
ConditionTables LoadTables(const std::string& path);

}  // namespace funcword::cli

#endif  // FUNCWORD_TOOLS_CLI_CONDITIONS_H_
