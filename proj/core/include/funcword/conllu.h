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

#ifndef FUNCWORD_CONLLU_H_
#define FUNCWORD_CONLLU_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "funcword/treebank.h"

namespace funcword {

// Fatal CoNLL-U format error: wrong column count, non-integer ID or HEAD.
class ConlluError : public std::runtime_error {
 public:
  ConlluError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A sentence that was dropped because its annotation violates the tree
// invariants. Parsing continues past it.
struct ConlluDiagnostic {
  std::size_t line = 0;  // first line of the offending sentence
  std::string sent_id;
  std::string message;
};

struct ConlluReadResult {
  Treebank treebank;
  std::vector<ConlluDiagnostic> diagnostics;
};

// Reads 10-column CoNLL-U. Multiword-token ranges ("1-2") and empty nodes
// ("3.1") are skipped, as are the DEPS and MISC columns.
ConlluReadResult ParseConllu(std::istream& in, std::string language_code,
                             std::string source_path = "");

// Reads a plain or gzip-compressed file; compression is detected from the
// content, not the extension.
ConlluReadResult ReadConlluFile(const std::filesystem::path& path,
                                std::string language_code);

// Serializes surface tokens. XPOS, FEATS, DEPS and MISC are written as "_".
void WriteConllu(std::ostream& out, const Treebank& treebank);
void WriteConllu(std::ostream& out, const Sentence& sentence);

// Whole-file read with transparent gzip decompression. Throws
// std::runtime_error when the file cannot be read.
std::string ReadMaybeGzipped(const std::filesystem::path& path);

// Guesses a language code from a UD-style file name such as
// "en_ewt-ud-train.conllu" -> "en".
std::string LanguageCodeFromFilename(const std::filesystem::path& path);

}  // namespace funcword

#endif  // FUNCWORD_CONLLU_H_
