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

#include "rdass/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <fstream>
#include <utility>

#include "rdass/error.hpp"

namespace rdass {
namespace {

using CodePoints = std::u32string;

void append_utf8(char32_t c, std::string& out) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string to_utf8(const char32_t* begin, const char32_t* end) {
  std::string out;
  out.reserve(static_cast<size_t>(end - begin));
  for (const char32_t* p = begin; p != end; ++p) append_utf8(*p, out);
  return out;
}

icu::UnicodeString normalize_unicode(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw ConfigError(std::string("ICU NFC normalizer unavailable: ") +
                      u_errorName(status));
  }
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString normalized = nfc->normalize(source, status);
  if (U_FAILURE(status)) {
    throw ArgumentError(std::string("NFC normalization failed: ") +
                        u_errorName(status));
  }
  normalized.foldCase(U_FOLD_CASE_DEFAULT);
  return normalized;
}

CodePoints normalized_code_points(std::string_view text) {
  icu::UnicodeString normalized = normalize_unicode(text);
  CodePoints out;
  out.reserve(static_cast<size_t>(normalized.length()));
  for (int32_t i = 0; i < normalized.length();) {
    UChar32 c = normalized.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }
bool is_punct(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

// Whitespace-delimited words, as code-point ranges into `cps`.
std::vector<std::pair<size_t, size_t>> split_words(const CodePoints& cps) {
  std::vector<std::pair<size_t, size_t>> words;
  size_t start = 0;
  bool in_word = false;
  for (size_t i = 0; i < cps.size(); ++i) {
    if (is_space(cps[i])) {
      if (in_word) words.emplace_back(start, i);
      in_word = false;
    } else if (!in_word) {
      start = i;
      in_word = true;
    }
  }
  if (in_word) words.emplace_back(start, cps.size());
  return words;
}

std::vector<std::string> word_tokens(const CodePoints& cps) {
  std::vector<std::string> tokens;
  for (auto [begin, end] : split_words(cps)) {
    while (begin < end && is_punct(cps[begin])) ++begin;
    while (end > begin && is_punct(cps[end - 1])) --end;
    if (begin < end) tokens.push_back(to_utf8(&cps[begin], &cps[end]));
  }
  return tokens;
}

std::vector<std::string> char_tokens(const CodePoints& cps) {
  std::vector<std::string> tokens;
  for (char32_t c : cps) {
    if (!is_space(c)) tokens.push_back(to_utf8(&c, &c + 1));
  }
  return tokens;
}

std::vector<std::string> subword_tokens(const CodePoints& cps,
                                        const Vocabulary& vocab) {
  std::vector<std::string> tokens;
  for (auto [begin, end] : split_words(cps)) {
    size_t pos = begin;
    while (pos < end) {
      size_t longest = std::min(vocab.max_length(), end - pos);
      size_t taken = 1;
      std::string piece;
      for (size_t len = longest; len >= 1; --len) {
        std::string candidate = to_utf8(&cps[pos], &cps[pos] + len);
        if (vocab.contains(candidate)) {
          taken = len;
          piece = std::move(candidate);
          break;
        }
      }
      if (piece.empty()) piece = to_utf8(&cps[pos], &cps[pos] + 1);
      tokens.push_back(std::move(piece));
      pos += taken;
    }
  }
  return tokens;
}

}  // namespace

std::string_view scheme_kind_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kWord:
      return "word";
    case SchemeKind::kChar:
      return "char";
    case SchemeKind::kSubwordFile:
      return "subword-file";
  }
  return "unknown";
}

Vocabulary Vocabulary::from_tokens(const std::vector<std::string>& tokens) {
  Vocabulary vocab;
  for (const std::string& raw : tokens) {
    CodePoints cps = normalized_code_points(raw);
    if (cps.empty()) continue;
    std::string token = to_utf8(cps.data(), cps.data() + cps.size());
    if (!vocab.tokens_.insert(token).second) {
      throw ConfigError("duplicate vocabulary entry: \"" + raw + "\"");
    }
    vocab.max_length_ = std::max(vocab.max_length_, cps.size());
  }
  if (vocab.tokens_.empty()) throw ConfigError("vocabulary is empty");
  return vocab;
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read vocabulary file: " + path.string());
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) {
    throw ConfigError("vocabulary file is empty: " + path.string());
  }
  try {
    return from_tokens(lines);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

bool Vocabulary::contains(std::string_view token) const {
  return tokens_.find(std::string(token)) != tokens_.end();
}

TokenizationScheme TokenizationScheme::word() {
  return TokenizationScheme(SchemeKind::kWord);
}

TokenizationScheme TokenizationScheme::character() {
  return TokenizationScheme(SchemeKind::kChar);
}

TokenizationScheme TokenizationScheme::subword(Vocabulary vocabulary) {
  TokenizationScheme scheme(SchemeKind::kSubwordFile);
  scheme.vocabulary_ =
      std::make_shared<const Vocabulary>(std::move(vocabulary));
  scheme.source_ = "<memory>";
  return scheme;
}

TokenizationScheme TokenizationScheme::subword_file(
    const std::filesystem::path& path) {
  TokenizationScheme scheme = subword(Vocabulary::load(path));
  scheme.source_ = path.string();
  return scheme;
}

TokenizationScheme TokenizationScheme::parse(std::string_view spec) {
  if (spec == "word") return word();
  if (spec == "char") return character();
  constexpr std::string_view kPrefix = "subword:";
  if (spec.substr(0, kPrefix.size()) == kPrefix &&
      spec.size() > kPrefix.size()) {
    return subword_file(std::string(spec.substr(kPrefix.size())));
  }
  throw ArgumentError("unknown tokenizer \"" + std::string(spec) +
                      "\" (expected word, char or subword:<path>)");
}

std::string TokenizationScheme::describe() const {
  if (kind_ == SchemeKind::kSubwordFile) return "subword:" + source_;
  return std::string(scheme_kind_name(kind_));
}

std::string normalize_text(std::string_view text) {
  std::string out;
  normalize_unicode(text).toUTF8String(out);
  return out;
}

bool is_blank(std::string_view text) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    if (!u_isUWhiteSpace(c)) return false;
    i += U16_LENGTH(c);
  }
  return true;
}

TokenSequence tokenize(std::string_view text,
                       const TokenizationScheme& scheme) {
  CodePoints cps = normalized_code_points(text);
  TokenSequence seq;
  seq.scheme = scheme.kind();
  switch (scheme.kind()) {
    case SchemeKind::kWord:
      seq.tokens = word_tokens(cps);
      break;
    case SchemeKind::kChar:
      seq.tokens = char_tokens(cps);
      break;
    case SchemeKind::kSubwordFile:
      if (scheme.vocabulary() == nullptr) {
        throw ConfigError("subword scheme has no vocabulary");
      }
      seq.tokens = subword_tokens(cps, *scheme.vocabulary());
      break;
  }
  return seq;
}

size_t NgramMultiset::total() const {
  size_t sum = 0;
  for (const auto& [gram, c] : counts) sum += c;
  return sum;
}

size_t NgramMultiset::count(const Ngram& gram) const {
  auto it = counts.find(gram);
  return it == counts.end() ? 0 : it->second;
}

NgramMultiset ngrams(const std::vector<std::string>& tokens, size_t n) {
  if (n < 1) throw ArgumentError("n-gram order must be >= 1");
  NgramMultiset out;
  out.n = n;
  if (tokens.size() < n) return out;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out.counts[Ngram(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return out;
}

NgramMultiset ngrams(const TokenSequence& seq, size_t n) {
  return ngrams(seq.tokens, n);
}

}  // namespace rdass
