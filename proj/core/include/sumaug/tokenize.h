// Copyright 2026 The sumaug Authors.
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

#ifndef SUMAUG_TOKENIZE_H_
#define SUMAUG_TOKENIZE_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sumaug {

using TokenSeq = std::vector<std::string>;

enum class TokenizerKind { kUnicodeWord, kWhitespace, kCharacter, kExternalVocab };

std::string_view to_string(TokenizerKind kind);
TokenizerKind parse_tokenizer_kind(std::string_view name);

struct TokenizerSpec {
  TokenizerKind kind = TokenizerKind::kUnicodeWord;
  std::optional<std::filesystem::path> vocab_path;  // required for kExternalVocab
  bool lowercase = false;
  // In kUnicodeWord mode, words written in scripts without word spacing
  // (Khmer, Lao, Burmese) are split into grapheme clusters.
  bool unspaced_fallback = true;
};

class Vocabulary;

// Immutable once constructed; safe to share between threads.
class Tokenizer {
 public:
  explicit Tokenizer(TokenizerSpec spec = {});

  TokenSeq operator()(std::string_view text) const;
  const TokenizerSpec& spec() const { return spec_; }

 private:
  TokenSeq split(std::string_view text) const;

  TokenizerSpec spec_;
  std::shared_ptr<const Vocabulary> vocab_;
};

TokenSeq tokenize(std::string_view text, const TokenizerSpec& spec);

// Greedy longest-match vocabulary. At each position the longest unit that
// matches is emitted; when nothing matches, a single code point is.
class Vocabulary {
 public:
  // One unit per line, UTF-8. Throws DataError for empty or malformed files.
  static Vocabulary load(const std::filesystem::path& path);
  static Vocabulary from_units(const std::vector<std::string>& units);

  TokenSeq segment(std::string_view chunk) const;
  std::size_t size() const { return size_; }

 private:
  struct Node {
    std::unordered_map<unsigned char, std::size_t> next;
    bool terminal = false;
  };
  void insert(std::string_view unit);

  std::vector<Node> nodes_{1};
  std::size_t size_ = 0;
};

// Multiset of n-grams. Keys are the tokens joined with U+001F.
struct NgramCounts {
  std::unordered_map<std::string, std::size_t> counts;
  std::size_t total = 0;

  std::size_t count(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }
};

inline constexpr char kNgramSeparator = '\x1f';

std::string ngram_key(const TokenSeq& tokens, std::size_t begin, std::size_t n);

// Requires n >= 1; total == max(0, tokens.size() - n + 1).
NgramCounts ngrams(const TokenSeq& tokens, std::size_t n);

}  // namespace sumaug

#endif  // SUMAUG_TOKENIZE_H_
