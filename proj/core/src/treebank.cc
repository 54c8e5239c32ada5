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

#include "funcword/treebank.h"

#include <algorithm>
#include <stdexcept>

namespace funcword {

std::optional<std::string> ValidateTokens(const std::vector<Token>& tokens) {
  const int n = static_cast<int>(tokens.size());
  if (n == 0) return "sentence has no tokens";
  bool has_root = false;
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    if (t.index != i + 1) {
      return "token indices are not contiguous at position " +
             std::to_string(i + 1);
    }
    if (t.head < 0 || t.head > n) {
      return "token " + std::to_string(t.index) + " has out-of-range head " +
             std::to_string(t.head);
    }
    if (t.head == t.index) {
      return "token " + std::to_string(t.index) + " is its own head";
    }
    if (t.head == 0) has_root = true;
  }
  if (!has_root) return "sentence has no root";

  // Walk each head chain; in an acyclic forest every chain reaches 0 within
  // n steps.
  std::vector<char> reaches_root(n + 1, 0);
  reaches_root[0] = 1;
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (!reaches_root[cur]) {
      path.push_back(cur);
      if (static_cast<int>(path.size()) > n) {
        return "head relation contains a cycle through token " +
               std::to_string(start);
      }
      cur = tokens[cur - 1].head;
    }
    for (int v : path) reaches_root[v] = 1;
  }
  return std::nullopt;
}

Sentence::Sentence(std::vector<Token> tokens, std::string sent_id,
                   std::string text)
    : tokens_(std::move(tokens)),
      sent_id_(std::move(sent_id)),
      text_(std::move(text)) {
  if (auto error = ValidateTokens(tokens_)) {
    throw std::invalid_argument(*error);
  }
  dependents_.resize(tokens_.size() + 1);
  for (const Token& t : tokens_) dependents_[t.head].push_back(t.index);
}

const Token& Sentence::token(int index) const {
  if (index < 1 || index > size()) {
    throw std::out_of_range("token index " + std::to_string(index) +
                            " outside 1.." + std::to_string(size()));
  }
  return tokens_[index - 1];
}

const std::vector<int>& Sentence::dependents(int index) const {
  if (index < 0 || index > size()) {
    throw std::out_of_range("token index " + std::to_string(index) +
                            " outside 0.." + std::to_string(size()));
  }
  return dependents_[index];
}

std::size_t Treebank::TokenCount() const {
  std::size_t total = 0;
  for (const Sentence& s : sentences) total += s.tokens().size();
  return total;
}

std::vector<int> SubtreeYield(const Sentence& sentence, int head_index) {
  sentence.token(head_index);  // range check
  std::vector<int> yield;
  std::vector<int> stack = {head_index};
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    yield.push_back(cur);
    for (int dep : sentence.dependents(cur)) stack.push_back(dep);
  }
  std::sort(yield.begin(), yield.end());
  return yield;
}

std::vector<int> UndirectedNeighbors(const Sentence& sentence, int index) {
  const Token& t = sentence.token(index);
  std::vector<int> neighbors = sentence.dependents(index);
  if (t.head != 0) neighbors.push_back(t.head);
  std::sort(neighbors.begin(), neighbors.end());
  return neighbors;
}

}  // namespace funcword
