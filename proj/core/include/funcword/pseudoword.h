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

#ifndef FUNCWORD_PSEUDOWORD_H_
#define FUNCWORD_PSEUDOWORD_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace funcword {

// Proposes candidate pseudowords for a source word. Candidates need not be
// unique; the map builder rejects collisions and asks again with the next
// attempt number.
class PseudowordGenerator {
 public:
  virtual ~PseudowordGenerator() = default;
  virtual std::string id() const = 0;
  // Must be a pure function of its arguments and return a non-empty
  // lowercase alphabetic string.
  virtual std::string Propose(std::string_view source, std::uint64_t seed,
                              int attempt) const = 0;
};

// Splits the source into onset/nucleus/coda syllables by vowel clusters and
// resamples each part from tables of English-legal graphemes, keeping the
// syllable count. Sources without vowels are treated as one syllable. After
// many rejected attempts a syllable is appended to widen the search space.
class SyllableSubstitutionGenerator : public PseudowordGenerator {
 public:
  std::string id() const override { return "syllable-substitution-v1"; }
  std::string Propose(std::string_view source, std::uint64_t seed,
                      int attempt) const override;
};

struct PseudowordMap {
  std::map<std::string, std::vector<std::string>> mapping;
  std::string generator_id;
  int fan_out = 0;

  const std::vector<std::string>& Lookup(std::string_view form) const;
};

// One ordered list of `fan_out` pseudowords per form. All pseudowords are
// pairwise distinct and none is in `vocabulary` or `forms`. Throws
// std::invalid_argument if fan_out < 1, std::runtime_error if the generator
// cannot produce a fresh word within the attempt budget.
PseudowordMap BuildPseudowordMap(const std::vector<std::string>& forms,
                                 int fan_out,
                                 const std::unordered_set<std::string>& vocabulary,
                                 const PseudowordGenerator& generator,
                                 std::uint64_t seed);

bool IsPseudowordShape(std::string_view word);

}  // namespace funcword

#endif  // FUNCWORD_PSEUDOWORD_H_
