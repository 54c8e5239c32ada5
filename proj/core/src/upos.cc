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

#include "funcword/upos.h"

namespace funcword {
namespace {

constexpr std::array<std::string_view, kNumUpos> kNames = {
    "ADJ",  "ADP",   "ADV",   "AUX",   "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON",  "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
};

}  // namespace

std::optional<Upos> ParseUpos(std::string_view tag) {
  for (int i = 0; i < kNumUpos; ++i) {
    if (kNames[i] == tag) return static_cast<Upos>(i);
  }
  return std::nullopt;
}

std::string_view UposName(Upos tag) { return kNames[UposIndex(tag)]; }

}  // namespace funcword
