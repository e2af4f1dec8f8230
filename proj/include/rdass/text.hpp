// Copyright 2026 The RDASS Authors.
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

// Text normalization, tokenization and n-gram extraction.
//
// All schemes first NFC-normalize and case-fold the input, so "Ä", "ä" and
// "ä" produce the same tokens.
//
//   word     split on Unicode whitespace, strip leading/trailing punctuation
//            from every token, drop tokens that become empty
//   char     one token per non-whitespace code point
//   subword  greedy longest match against a vocabulary file inside every
//            whitespace-delimited word; spans not covered by the vocabulary
//            fall back to single code points

#ifndef RDASS_TEXT_HPP_
#define RDASS_TEXT_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace rdass {

enum class SchemeKind { kWord, kChar, kSubwordFile };

std::string_view scheme_kind_name(SchemeKind kind);

// Normalized subword vocabulary. Immutable once loaded.
class Vocabulary {
 public:
  // One token per line, UTF-8, no duplicates. Entries are normalized with
  // the same NFC + case-fold pipeline as the text. Throws ConfigError when
  // the file cannot be read, holds no tokens, or repeats an entry.
  static Vocabulary load(const std::filesystem::path& path);
  static Vocabulary from_tokens(const std::vector<std::string>& tokens);

  bool contains(std::string_view token) const;
  size_t size() const { return tokens_.size(); }
  // Length in code points of the longest entry.
  size_t max_length() const { return max_length_; }

 private:
  Vocabulary() = default;

  std::unordered_set<std::string> tokens_;
  size_t max_length_ = 0;
};

// A tokenization scheme tag. Cheap to copy; subword schemes share their
// vocabulary.
class TokenizationScheme {
 public:
  static TokenizationScheme word();
  static TokenizationScheme character();
  static TokenizationScheme subword_file(const std::filesystem::path& path);
  static TokenizationScheme subword(Vocabulary vocabulary);

  // Parses "word", "char" or "subword:<path>".
  static TokenizationScheme parse(std::string_view spec);

  SchemeKind kind() const { return kind_; }
  const Vocabulary* vocabulary() const { return vocabulary_.get(); }
  std::string describe() const;

 private:
  explicit TokenizationScheme(SchemeKind kind) : kind_(kind) {}

  SchemeKind kind_;
  std::shared_ptr<const Vocabulary> vocabulary_;
  std::string source_;
};

struct TokenSequence {
  std::vector<std::string> tokens;
  SchemeKind scheme = SchemeKind::kWord;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// NFC + case fold. Invalid UTF-8 sequences become U+FFFD.
std::string normalize_text(std::string_view text);

// True when the text has no non-whitespace code point.
bool is_blank(std::string_view text);

TokenSequence tokenize(std::string_view text,
                       const TokenizationScheme& scheme);

using Ngram = std::vector<std::string>;

struct NgramMultiset {
  size_t n = 1;
  std::map<Ngram, size_t> counts;

  size_t total() const;
  size_t count(const Ngram& gram) const;
};

// Sliding window of width n. Throws ArgumentError when n < 1.
NgramMultiset ngrams(const TokenSequence& seq, size_t n);
NgramMultiset ngrams(const std::vector<std::string>& tokens, size_t n);

}  // namespace rdass

#endif  // RDASS_TEXT_HPP_
