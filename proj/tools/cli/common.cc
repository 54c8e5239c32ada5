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

#include "cli/common.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "funcword/version.h"

namespace funcword::cli {

namespace fs = std::filesystem;

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

std::string Sha256File(const fs::path& path) { return Sha256Hex(ReadFileOrThrow(path)); }

Manifest::Manifest(std::string command, const GlobalOptions& global)
    : command_(std::move(command)), seed_(global.seed), jobs_(global.jobs) {}

void Manifest::AddInput(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  for (const fs::path& f : files) {
    const std::string bytes = ReadFileOrThrow(f);
    inputs_.push_back(
        {{"path", f.generic_string()}, {"bytes", bytes.size()}, {"sha256", Sha256Hex(bytes)}});
  }
}

void Manifest::AddOutput(const std::string& relative, std::string_view bytes) {
  outputs_.push_back(
      {{"path", relative}, {"bytes", bytes.size()}, {"sha256", Sha256Hex(bytes)}});
}

void Manifest::Write(const fs::path& out_dir) const {
  nlohmann::json root = {{"tool", "funcword"},
                         {"version", kVersion},
                         {"command", command_},
                         {"seed", seed_},
                         {"jobs", jobs_},
                         {"config", config_},
                         {"inputs", inputs_},
                         {"outputs", outputs_}};
  std::ofstream out(out_dir / "manifest.json", std::ios::binary);
  out << root.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write manifest.json");
}

void RunContext::WriteOutput(const std::string& relative, const std::string& bytes) const {
  const fs::path path = out_dir / relative;
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  if (!out) throw std::runtime_error("cannot write " + path.string());
  manifest->AddOutput(relative, bytes);
}

fs::path PrepareOutputDir(const std::string& out, bool force) {
  if (out.empty()) throw InputError("--out is required");
  const fs::path dir(out);
  if (fs::exists(dir)) {
    if (!fs::is_directory(dir)) throw InputError(out + " exists and is not a directory");
    if (!fs::is_empty(dir) && !force) {
      throw InputError("output directory " + out +
                       " is not empty; pass --force to overwrite");
    }
  }
  fs::create_directories(dir);
  return dir;
}

std::string ReadFileOrThrow(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

FunctionInventory LoadInventory(const std::string& path) {
  if (path.empty()) return FunctionInventory::English();
  std::istringstream in(ReadFileOrThrow(path));
  try {
    return ReadInventory(in);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace funcword::cli
