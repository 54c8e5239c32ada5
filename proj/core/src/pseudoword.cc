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

#include "funcword/pseudoword.h"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "funcword/rng.h"

namespace funcword {
namespace {

constexpr int kMaxAttempts = 2000;

enum class Part { kEmpty, kSingle, kCluster };

struct Syllable {
  Part onset = Part::kEmpty;
  bool long_nucleus = false;
  Part coda = Part::kEmpty;
};

constexpr std::array<std::string_view, 17> kSingleOnsets = {
    "b", "c", "d", "f", "g", "h", "j", "k", "l",
    "m", "n", "p", "r", "s", "t", "v", "w"};
constexpr std::array<std::string_view, 23> kClusterOnsets = {
    "bl", "br", "ch", "cl", "cr", "dr", "fl", "fr", "gl", "gr", "pl", "pr",
    "sc", "sh", "sk", "sl", "sm", "sn", "sp", "st", "sw", "th", "tr"};
constexpr std::array<std::string_view, 5> kShortNuclei = {"a", "e", "i", "o", "u"};
constexpr std::array<std::string_view, 10> kLongNuclei = {
    "ai", "au", "ea", "ee", "ie", "oa", "oo", "ou", "oi", "ue"};
constexpr std::array<std::string_view, 12> kSingleCodas = {
    "b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t"};
constexpr std::array<std::string_view, 20> kClusterCodas = {
    "ck", "ft", "ld", "lk", "lm", "lp", "lt", "mp", "nd", "ng",
    "nk", "nt", "rd", "rk", "rm", "rn", "rt", "sk", "sp", "st"};

bool IsVowel(char c, bool word_initial) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' ||
         (c == 'y' && !word_initial);
}

Part PartFor(std::size_t length) {
  return length == 0 ? Part::kEmpty : length == 1 ? Part::kSingle : Part::kCluster;
}

// Vowel-cluster syllabification. An intervocalic consonant run gives its
// last consonant to the next onset and the rest to the current coda.
std::vector<Syllable> Syllabify(std::string_view source) {
  std::string letters;
  for (char c : source) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c >= 'a' && c <= 'z') letters.push_back(c);
  }
  std::vector<Syllable> syllables;
  std::size_t i = 0;
  std::size_t pending_onset = 0;
  while (i < letters.size() && !IsVowel(letters[i], i == 0)) {
    ++pending_onset;
    ++i;
  }
  while (i < letters.size()) {
    Syllable syl;
    syl.onset = PartFor(pending_onset);
    std::size_t nucleus = 0;
    while (i < letters.size() && IsVowel(letters[i], i == 0)) {
      ++nucleus;
      ++i;
    }
    syl.long_nucleus = nucleus > 1;
    std::size_t consonants = 0;
    while (i < letters.size() && !IsVowel(letters[i], i == 0)) {
      ++consonants;
      ++i;
    }
    if (i < letters.size() && consonants > 0) {
      syl.coda = PartFor(consonants - 1);
      pending_onset = 1;
    } else {
      syl.coda = PartFor(consonants);
      pending_onset = 0;
    }
    syllables.push_back(syl);
  }
  if (syllables.empty()) {
    Syllable syl;
    syl.onset = pending_onset > 0 ? Part::kSingle : Part::kEmpty;
    syllables.push_back(syl);
  }
  return syllables;
}

template <std::size_t N>
std::string_view Pick(const std::array<std::string_view, N>& table, Rng& rng) {
  return table[rng.Below(N)];
}

Part RandomPart(Rng& rng) { return static_cast<Part>(rng.Below(3)); }

}  // namespace

std::string SyllableSubstitutionGenerator::Propose(std::string_view source,
                                                   std::uint64_t seed,
                                                   int attempt) const {
  Rng rng(MixSeed(seed, {HashString(source), static_cast<std::uint64_t>(attempt)}));
  std::vector<Syllable> shape = Syllabify(source);
  // Early attempts keep the source's onset/nucleus/coda shape; later ones
  // vary it, and eventually grow the word.
  if (attempt >= 16) {
    for (Syllable& syl : shape) {
      syl.onset = RandomPart(rng);
      syl.long_nucleus = rng.Below(2) == 1;
      syl.coda = RandomPart(rng);
    }
  }
  if (attempt >= 48) {
    const int extra = 1 + (attempt - 48) / 32;
    for (int k = 0; k < extra; ++k) {
      shape.push_back({RandomPart(rng), rng.Below(2) == 1, RandomPart(rng)});
    }
  }

  std::string word;
  for (const Syllable& syl : shape) {
    if (syl.onset == Part::kSingle) word += Pick(kSingleOnsets, rng);
    if (syl.onset == Part::kCluster) word += Pick(kClusterOnsets, rng);
    word += syl.long_nucleus ? Pick(kLongNuclei, rng) : Pick(kShortNuclei, rng);
    if (syl.coda == Part::kSingle) word += Pick(kSingleCodas, rng);
    if (syl.coda == Part::kCluster) word += Pick(kClusterCodas, rng);
  }
  return word;
}

const std::vector<std::string>& PseudowordMap::Lookup(std::string_view form) const {
  auto it = mapping.find(std::string(form));
  if (it == mapping.end()) {
    throw std::out_of_range("no pseudowords for function form '" +
                            std::string(form) + "'");
  }
  return it->second;
}

bool IsPseudowordShape(std::string_view word) {
  if (word.empty()) return false;
  for (char c : word) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

PseudowordMap BuildPseudowordMap(const std::vector<std::string>& forms,
                                 int fan_out,
                                 const std::unordered_set<std::string>& vocabulary,
                                 const PseudowordGenerator& generator,
                                 std::uint64_t seed) {
  if (fan_out < 1) throw std::invalid_argument("fan-out must be >= 1");
  PseudowordMap map;
  map.generator_id = generator.id();
  map.fan_out = fan_out;

  std::unordered_set<std::string> taken(forms.begin(), forms.end());
  std::vector<std::string> sorted(forms.begin(), forms.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  for (const std::string& form : sorted) {
    std::vector<std::string>& slots = map.mapping[form];
    for (int slot = 0; slot < fan_out; ++slot) {
      const std::uint64_t slot_seed =
          MixSeed(seed, {static_cast<std::uint64_t>(slot)});
      bool placed = false;
      for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
        std::string candidate = generator.Propose(form, slot_seed, attempt);
        if (!IsPseudowordShape(candidate) || vocabulary.count(candidate) ||
            taken.count(candidate)) {
          continue;
        }
        taken.insert(candidate);
        slots.push_back(std::move(candidate));
        placed = true;
      }
      if (!placed) {
        throw std::runtime_error("pseudoword generator '" + generator.id() +
                                 "' exhausted its attempts for '" + form + "'");
      }
    }
  }
  return map;
}

}  // namespace funcword
