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

#ifndef FUNCWORD_TREEBANK_H_
#define FUNCWORD_TREEBANK_H_

#include <optional>
#include <string>
#include <vector>

#include "funcword/upos.h"

namespace funcword {

// One surface token of a basic UD dependency tree. Indices are 1-based and
// head 0 marks a root.
struct Token {
  int index = 0;
  std::string form;
  std::string lemma;
  Upos upos = Upos::kX;
  int head = 0;
  std::string deprel;

  bool operator==(const Token&) const = default;
};

// Returns a description of the first violated tree invariant, or nullopt
// when the tokens form a well-formed dependency forest: contiguous indices
// 1..n, heads within 0..n, no self-loops, no cycles, at least one root.
std::optional<std::string> ValidateTokens(const std::vector<Token>& tokens);

// An immutable dependency-annotated sentence. More than one token may have
// head 0; each such token roots its own subtree.
class Sentence {
 public:
  Sentence() = default;

  // Throws std::invalid_argument if ValidateTokens() rejects `tokens`.
  explicit Sentence(std::vector<Token> tokens, std::string sent_id = "",
                    std::string text = "");

  int size() const { return static_cast<int>(tokens_.size()); }
  bool empty() const { return tokens_.empty(); }

  // 1-based access. Throws std::out_of_range.
  const Token& token(int index) const;
  const std::vector<Token>& tokens() const { return tokens_; }

  // Direct dependents of `index` in surface order; dependents(0) lists the
  // roots. Throws std::out_of_range.
  const std::vector<int>& dependents(int index) const;

  const std::string& sent_id() const { return sent_id_; }
  const std::string& text() const { return text_; }

  bool operator==(const Sentence& other) const {
    return tokens_ == other.tokens_ && sent_id_ == other.sent_id_ &&
           text_ == other.text_;
  }

 private:
  std::vector<Token> tokens_;
  std::vector<std::vector<int>> dependents_;
  std::string sent_id_;
  std::string text_;
};

struct Treebank {
  std::string language_code;
  std::vector<Sentence> sentences;
  std::string source_path;

  std::size_t TokenCount() const;
  bool operator==(const Treebank&) const = default;
};

// `head_index` plus all of its transitive dependents, in surface order.
// Throws std::out_of_range for an invalid index.
std::vector<int> SubtreeYield(const Sentence& sentence, int head_index);

// The governor of `index` (unless it is a root) and its direct dependents,
// sorted. Throws std::out_of_range for an invalid index.
std::vector<int> UndirectedNeighbors(const Sentence& sentence, int index);

}  // namespace funcword

#endif  // FUNCWORD_TREEBANK_H_
