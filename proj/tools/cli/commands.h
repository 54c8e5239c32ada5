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

#ifndef FUNCWORD_TOOLS_CLI_COMMANDS_H_
#define FUNCWORD_TOOLS_CLI_COMMANDS_H_

#include <functional>

#include <CLI11.hpp>

#include "cli/common.h"

namespace funcword::cli {

using CommandRunner = std::function<void(const RunContext&)>;

// Each function adds one subcommand to `root` and stores the action that
// runs it, bound to the parsed options, in `run`.
CLI::App* RegisterTypology(CLI::App& root, CommandRunner* run);
CLI::App* RegisterInventory(CLI::App& root, CommandRunner* run);
CLI::App* RegisterGenerate(CLI::App& root, CommandRunner* run);
CLI::App* RegisterBenchmark(CLI::App& root, CommandRunner* run);
CLI::App* RegisterProbe(CLI::App& root, CommandRunner* run);

}  // namespace funcword::cli

#endif  // FUNCWORD_TOOLS_CLI_COMMANDS_H_
