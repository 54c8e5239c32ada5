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

#include "funcword/conllu.h"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace funcword {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool ParseInt(std::string_view text, int* value) {
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

// Accumulates the lines of one sentence.
struct PendingSentence {
  std::size_t first_line = 0;
  std::string sent_id;
  std::string text;
  std::vector<Token> tokens;
  std::string rejection;  // non-empty once the sentence is known to be bad

  bool started() const { return first_line != 0; }
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void ParseComment(std::string_view line, PendingSentence* pending) {
  std::string_view body = Trim(line.substr(1));
  const std::size_t eq = body.find('=');
  if (eq == std::string_view::npos) return;
  const std::string_view key = Trim(body.substr(0, eq));
  const std::string_view value = Trim(body.substr(eq + 1));
  if (key == "sent_id") {
    pending->sent_id = std::string(value);
  } else if (key == "text") {
    pending->text = std::string(value);
  }
}

}  // namespace

ConlluError::ConlluError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

ConlluReadResult ParseConllu(std::istream& in, std::string language_code,
                             std::string source_path) {
  ConlluReadResult result;
  result.treebank.language_code = std::move(language_code);
  result.treebank.source_path = std::move(source_path);

  PendingSentence pending;
  auto flush = [&]() {
    if (!pending.started()) return;
    if (pending.tokens.empty() && pending.rejection.empty()) {
      pending = PendingSentence();
      return;
    }
    if (pending.rejection.empty()) {
      if (auto error = ValidateTokens(pending.tokens)) {
        pending.rejection = *error;
      }
    }
    if (pending.rejection.empty()) {
      result.treebank.sentences.emplace_back(std::move(pending.tokens),
                                             std::move(pending.sent_id),
                                             std::move(pending.text));
    } else {
      result.diagnostics.push_back(
          {pending.first_line, pending.sent_id, pending.rejection});
    }
    pending = PendingSentence();
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") {
      line.remove_prefix(3);
    }
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    if (!pending.started()) pending.first_line = line_no;
    if (line.front() == '#') {
      ParseComment(line, &pending);
      continue;
    }

    const std::vector<std::string_view> cols = SplitTabs(line);
    if (cols.size() != 10) {
      throw ConlluError(line_no, "expected 10 tab-separated columns, found " +
                                     std::to_string(cols.size()));
    }
    const std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      continue;  // multiword range or empty node
    }
    Token token;
    if (!ParseInt(id, &token.index)) {
      throw ConlluError(line_no, "non-integer token id '" + std::string(id) + "'");
    }
    if (!ParseInt(cols[6], &token.head)) {
      throw ConlluError(line_no,
                        "non-integer head '" + std::string(cols[6]) + "'");
    }
    token.form = std::string(cols[1]);
    token.lemma = std::string(cols[2]);
    token.deprel = std::string(cols[7]);
    if (auto tag = ParseUpos(cols[3])) {
      token.upos = *tag;
    } else if (pending.rejection.empty()) {
      pending.rejection = "unknown UPOS tag '" + std::string(cols[3]) +
                          "' on line " + std::to_string(line_no);
    }
    pending.tokens.push_back(std::move(token));
  }
  flush();
  return result;
}

std::string ReadMaybeGzipped(const std::filesystem::path& path) {
  gzFile file = gzopen(path.string().c_str(), "rb");
  if (file == nullptr) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::string data;
  char buffer[1 << 16];
  while (true) {
    const int n = gzread(file, buffer, sizeof(buffer));
    if (n < 0) {
      int errnum = 0;
      const std::string message = gzerror(file, &errnum);
      gzclose(file);
      throw std::runtime_error("error reading " + path.string() + ": " + message);
    }
    if (n == 0) break;
    data.append(buffer, static_cast<std::size_t>(n));
  }
  gzclose(file);
  return data;
}

ConlluReadResult ReadConlluFile(const std::filesystem::path& path,
                                std::string language_code) {
  std::istringstream in(ReadMaybeGzipped(path));
  return ParseConllu(in, std::move(language_code), path.string());
}

void WriteConllu(std::ostream& out, const Sentence& sentence) {
  if (!sentence.sent_id().empty()) {
    out << "# sent_id = " << sentence.sent_id() << '\n';
  }
  if (!sentence.text().empty()) out << "# text = " << sentence.text() << '\n';
  for (const Token& t : sentence.tokens()) {
    out << t.index << '\t' << t.form << '\t' << (t.lemma.empty() ? "_" : t.lemma)
        << '\t' << UposName(t.upos) << "\t_\t_\t" << t.head << '\t'
        << (t.deprel.empty() ? "_" : t.deprel) << "\t_\t_\n";
  }
  out << '\n';
}

void WriteConllu(std::ostream& out, const Treebank& treebank) {
  for (const Sentence& s : treebank.sentences) WriteConllu(out, s);
}

std::string LanguageCodeFromFilename(const std::filesystem::path& path) {
  std::string name = path.filename().string();
  const std::size_t cut = name.find_first_of("_-.");
  return cut == std::string::npos || cut == 0 ? name : name.substr(0, cut);
}

}  // namespace funcword
