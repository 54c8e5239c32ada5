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

#ifndef FUNCWORD_UPOS_H_
#define FUNCWORD_UPOS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace funcword {

// The 17 universal part-of-speech tags, in alphabetical order.
enum class Upos : std::uint8_t {
  kAdj,
  kAdp,
  kAdv,
  kAux,
  kCconj,
  kDet,
  kIntj,
  kNoun,
  kNum,
  kPart,
  kPron,
  kPropn,
  kPunct,
  kSconj,
  kSym,
  kVerb,
  kX,
};

inline constexpr int kNumUpos = 17;

inline constexpr std::array<Upos, kNumUpos> kAllUpos = {
    Upos::kAdj,   Upos::kAdp,   Upos::kAdv,  Upos::kAux,   Upos::kCconj,
    Upos::kDet,   Upos::kIntj,  Upos::kNoun, Upos::kNum,   Upos::kPart,
    Upos::kPron,  Upos::kPropn, Upos::kPunct, Upos::kSconj, Upos::kSym,
    Upos::kVerb,  Upos::kX,
};

std::optional<Upos> ParseUpos(std::string_view tag);
std::string_view UposName(Upos tag);

constexpr int UposIndex(Upos tag) { return static_cast<int>(tag); }

// X, PUNCT and SYM carry no lexical content and are dropped from the
// distributional statistics.
constexpr bool IsNonLinguistic(Upos tag) {
  return tag == Upos::kX || tag == Upos::kPunct || tag == Upos::kSym;
}

// UD closed-class tags with NUM counted as content.
constexpr bool IsClosedClass(Upos tag) {
  switch (tag) {
    case Upos::kAdp:
    case Upos::kAux:
    case Upos::kCconj:
    case Upos::kDet:
    case Upos::kPart:
    case Upos::kPron:
    case Upos::kSconj:
      return true;
    default:
      return false;
  }
}

constexpr bool IsOpenClass(Upos tag) {
  return !IsClosedClass(tag) && !IsNonLinguistic(tag);
}

}  // namespace funcword

#endif  // FUNCWORD_UPOS_H_
