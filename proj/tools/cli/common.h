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

#ifndef FUNCWORD_TOOLS_CLI_COMMON_H_
#define FUNCWORD_TOOLS_CLI_COMMON_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "funcword/inventory.h"

namespace funcword::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadInput = 2;

// Problems with user-supplied files or flags; mapped to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out;
  bool force = false;
  int jobs = 1;
};

std::string Sha256Hex(std::string_view bytes);
std::string Sha256File(const std::filesystem::path& path);

// Collects what a run read and wrote. Written last as manifest.json, so a
// run that fails midway leaves no manifest behind.
class Manifest {
 public:
  Manifest(std::string command, const GlobalOptions& global);

  nlohmann::json& config() { return config_; }
  // Files are hashed directly; directories contribute every regular file
  // below them in sorted order.
  void AddInput(const std::filesystem::path& path);
  void AddOutput(const std::string& relative, std::string_view bytes);
  void Write(const std::filesystem::path& out_dir) const;

 private:
  std::string command_;
  std::uint64_t seed_;
  int jobs_;
  nlohmann::json config_ = nlohmann::json::object();
  nlohmann::json inputs_ = nlohmann::json::array();
  nlohmann::json outputs_ = nlohmann::json::array();
};

// Everything a command needs besides its own options.
struct RunContext {
  GlobalOptions global;
  std::filesystem::path out_dir;
  std::ostream* log;
  Manifest* manifest;

  // Writes `bytes` to out_dir/relative (creating parents) and records it.
  void WriteOutput(const std::string& relative, const std::string& bytes) const;
};

// Refuses a non-empty existing directory unless `force` is set.
std::filesystem::path PrepareOutputDir(const std::string& out, bool force);

std::string ReadFileOrThrow(const std::filesystem::path& path);

// "%.6f"-style rendering that is identical on every platform.
std::string Fixed(double value, int digits = 6);

// Loads an inventory JSON, or the built-in English one when `path` is empty.
FunctionInventory LoadInventory(const std::string& path);

}  // namespace funcword::cli

#endif  // FUNCWORD_TOOLS_CLI_COMMON_H_
