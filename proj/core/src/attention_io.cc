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

#include "funcword/attention_io.h"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

namespace funcword {
namespace {

using nlohmann::json;

template <typename T>
T Field(const json& obj, const char* name, std::size_t index) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw BundleFormatError("manifest bundle " + std::to_string(index) +
                            ": missing field '" + name + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw BundleFormatError("manifest bundle " + std::to_string(index) +
                            ": field '" + name + "' has the wrong type");
  }
}

std::string FileNameFor(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "bundle-%06zu.f32", index);
  return buf;
}

}  // namespace

void WriteFloat32LE(std::ostream& out, const std::vector<double>& values) {
  std::vector<char> bytes(values.size() * 4);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(values[i]));
    for (int k = 0; k < 4; ++k) {
      bytes[i * 4 + k] = static_cast<char>((bits >> (8 * k)) & 0xFF);
    }
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::vector<double> ReadFloat32LE(std::istream& in, std::size_t count) {
  std::vector<unsigned char> bytes(count * 4);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) {
    throw BundleFormatError("tensor file is shorter than its declared shape");
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t bits = 0;
    for (int k = 0; k < 4; ++k) bits |= std::uint32_t{bytes[i * 4 + k]} << (8 * k);
    values[i] = std::bit_cast<float>(bits);
  }
  return values;
}

void WriteBundleDirectory(const std::filesystem::path& dir,
                          const std::vector<AttentionBundle>& bundles) {
  std::filesystem::create_directories(dir);
  json list = json::array();
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const AttentionBundle& b = bundles[i];
    const std::string file = FileNameFor(i);
    std::ofstream out(dir / file, std::ios::binary);
    WriteFloat32LE(out, b.attention);
    if (!out) throw std::runtime_error("cannot write " + (dir / file).string());
    std::vector<bool> flags = b.function_flags;
    list.push_back({{"sentence_id", b.sentence_id},
                    {"subcategory", b.subcategory},
                    {"layers", b.layers},
                    {"heads", b.heads},
                    {"seq_len", b.seq_len},
                    {"word_forms", b.word_forms},
                    {"function_flags", flags},
                    {"alignment", b.alignment},
                    {"file", file}});
  }
  std::ofstream manifest(dir / kBundleManifestName);
  manifest << json{{"version", 1}, {"bundles", list}}.dump(1) << '\n';
  if (!manifest) throw std::runtime_error("cannot write manifest in " + dir.string());
}

std::vector<AttentionBundle> ReadBundleDirectory(const std::filesystem::path& dir) {
  const std::filesystem::path manifest_path = dir / kBundleManifestName;
  std::ifstream manifest(manifest_path);
  if (!manifest) throw BundleFormatError("no manifest at " + manifest_path.string());
  json root;
  try {
    root = json::parse(manifest);
  } catch (const json::parse_error& e) {
    throw BundleFormatError("manifest is not valid JSON: " + std::string(e.what()));
  }
  if (!root.is_object() || root.value("version", 0) != 1 ||
      !root.contains("bundles") || !root["bundles"].is_array()) {
    throw BundleFormatError("manifest needs version 1 and a bundles array");
  }

  std::vector<AttentionBundle> bundles;
  std::set<std::string> seen;
  std::size_t index = 0;
  for (const json& entry : root["bundles"]) {
    if (!entry.is_object()) {
      throw BundleFormatError("manifest bundle " + std::to_string(index) +
                              " is not an object");
    }
    AttentionBundle b;
    b.sentence_id = Field<std::string>(entry, "sentence_id", index);
    b.subcategory = Field<std::string>(entry, "subcategory", index);
    b.layers = Field<int>(entry, "layers", index);
    b.heads = Field<int>(entry, "heads", index);
    b.seq_len = Field<int>(entry, "seq_len", index);
    b.word_forms = Field<std::vector<std::string>>(entry, "word_forms", index);
    b.function_flags = Field<std::vector<bool>>(entry, "function_flags", index);
    b.alignment = Field<std::vector<int>>(entry, "alignment", index);
    const std::string file = Field<std::string>(entry, "file", index);
    if (!seen.insert(b.sentence_id).second) {
      throw BundleFormatError("duplicate sentence_id '" + b.sentence_id + "'");
    }
    if (b.layers < 1 || b.heads < 1 || b.seq_len < 1) {
      throw BundleFormatError("bundle '" + b.sentence_id + "': non-positive shape");
    }

    std::ifstream in(dir / file, std::ios::binary);
    if (!in) throw BundleFormatError("missing tensor file " + (dir / file).string());
    const std::size_t s = static_cast<std::size_t>(b.seq_len);
    const std::size_t count = static_cast<std::size_t>(b.layers) * b.heads * s * s;
    try {
      b.attention = ReadFloat32LE(in, count);
    } catch (const BundleFormatError& e) {
      throw BundleFormatError("bundle '" + b.sentence_id + "': " + e.what());
    }
    if (in.peek() != std::char_traits<char>::eof()) {
      throw BundleFormatError("bundle '" + b.sentence_id +
                              "': tensor file is longer than its declared shape");
    }
    if (auto problem = CheckBundleShape(b)) {
      throw BundleFormatError("bundle '" + b.sentence_id + "': " + *problem);
    }
    bundles.push_back(std::move(b));
    ++index;
  }
  return bundles;
}

void WriteMasks(std::ostream& out, const std::vector<AblationMask>& masks) {
  for (const AblationMask& m : masks) {
    out << json{{"sentence_id", m.sentence_id},
                {"positions", m.positions},
                {"mode", std::string(MaskModeName(m.mode))}}
               .dump()
        << '\n';
  }
}

std::vector<AblationMask> ReadMasks(std::istream& in) {
  std::vector<AblationMask> masks;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      const json obj = json::parse(line);
      AblationMask m;
      m.sentence_id = obj.at("sentence_id").get<std::string>();
      m.positions = obj.at("positions").get<std::vector<int>>();
      auto mode = ParseMaskMode(obj.at("mode").get<std::string>());
      if (!mode) throw std::runtime_error(where + "unknown mask mode");
      m.mode = *mode;
      masks.push_back(std::move(m));
    } catch (const json::exception& e) {
      throw std::runtime_error(where + e.what());
    }
  }
  return masks;
}

}  // namespace funcword
