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

#ifndef FUNCWORD_ATTENTION_IO_H_
#define FUNCWORD_ATTENTION_IO_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "funcword/probe.h"

namespace funcword {

// Malformed manifests, missing or truncated tensor files, invalid bundles.
class BundleFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr char kBundleManifestName[] = "manifest.json";

// Writes `dir`/manifest.json and one little-endian float32 file per bundle
// (row-major [L, H, S, S]). The manifest is
//   {"version": 1, "bundles": [{"sentence_id", "subcategory", "layers",
//    "heads", "seq_len", "word_forms", "function_flags", "alignment",
//    "file"}, ...]}
// with "file" relative to `dir`. Creates `dir` if needed.
void WriteBundleDirectory(const std::filesystem::path& dir,
                          const std::vector<AttentionBundle>& bundles);

// Reads and shape-checks every bundle listed in the manifest. Row sums are
// not checked here; see ValidateBundle.
std::vector<AttentionBundle> ReadBundleDirectory(const std::filesystem::path& dir);

// Little-endian float32 tensors, independent of host byte order.
void WriteFloat32LE(std::ostream& out, const std::vector<double>& values);
std::vector<double> ReadFloat32LE(std::istream& in, std::size_t count);

// Mask JSON-lines: {"sentence_id", "positions", "mode"}.
void WriteMasks(std::ostream& out, const std::vector<AblationMask>& masks);
// Throws std::runtime_error with the line number on malformed input.
std::vector<AblationMask> ReadMasks(std::istream& in);

}  // namespace funcword

#endif  // FUNCWORD_ATTENTION_IO_H_
