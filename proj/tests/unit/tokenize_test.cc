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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "oracles.h"
#include "sumaug/error.h"
#include "sumaug/tokenize.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

TokenizerSpec spec(TokenizerKind kind) {
  TokenizerSpec s;
  s.kind = kind;
  return s;
}

TEST(Tokenize, UnicodeWordDropsPunctuation) {
  EXPECT_EQ(tokenize("Hello, world!", {}), (TokenSeq{"Hello", "world"}));
}

TEST(Tokenize, Whitespace) {
  EXPECT_EQ(tokenize(" a  b,\tc\n", spec(TokenizerKind::kWhitespace)), (TokenSeq{"a", "b,", "c"}));
}

TEST(Tokenize, KhmerCharacterModeCountsGraphemes) {
  // Seven clusters: ក ខ គ ស្ រី មា ន. The coeng sign only extends its base.
  const std::string text = "កខគស្រីមាន";
  const auto clusters = unicode::graphemes(text);
  const auto toks = tokenize(text, spec(TokenizerKind::kCharacter));
  EXPECT_EQ(toks.size(), clusters.size());
  EXPECT_EQ(toks.size(), 7u);
}

TEST(Tokenize, UnspacedScriptFallsBackToClusters) {
  const auto word = tokenize("កខគ", {});
  EXPECT_EQ(word, (TokenSeq{"ក", "ខ", "គ"}));
  // Without the fallback the dictionary word breaker keeps a known word whole.
  TokenizerSpec off;
  off.unspaced_fallback = false;
  EXPECT_EQ(tokenize("ស្រី", off), (TokenSeq{"ស្រី"}));
  EXPECT_EQ(tokenize("ស្រី", {}), (TokenSeq{"ស្", "រី"}));
}

TEST(Tokenize, Lowercase) {
  TokenizerSpec s;
  s.lowercase = true;
  EXPECT_EQ(tokenize("ÄBC Déf", s), (TokenSeq{"äbc", "déf"}));
}

TEST(Vocabulary, GreedyExample) {
  const auto v = Vocabulary::from_units({"ab", "a", "b"});
  EXPECT_EQ(v.segment("abab"), (TokenSeq{"ab", "ab"}));
}

TEST(Vocabulary, MatchesGreedyOracle) {
  const std::vector<std::string> units = {"a", "ab", "abc", "bc", "c", "ca", "cab", "bb"};
  const auto v = Vocabulary::from_units(units);
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    std::string s;
    const int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) s += "abcd"[rng() % 4];
    EXPECT_EQ(v.segment(s), oracle::greedy_segment(s, units)) << s;
  }
}

TEST(Vocabulary, UnknownCodePointIsOneToken) {
  const auto v = Vocabulary::from_units({"ab"});
  EXPECT_EQ(v.segment("აab"), (TokenSeq{"ა", "ab"}));
}

TEST(Vocabulary, ExternalVocabTokenizer) {
  const auto path = std::filesystem::temp_directory_path() / "sumaug_vocab_test.txt";
  {
    std::ofstream out(path);
    out << "ab\na\nb\n";
  }
  TokenizerSpec s = spec(TokenizerKind::kExternalVocab);
  s.vocab_path = path;
  EXPECT_EQ(Tokenizer(s)("abab ba"), (TokenSeq{"ab", "ab", "b", "a"}));
  std::filesystem::remove(path);
}

TEST(Vocabulary, MissingPathIsConfigError) {
  EXPECT_THROW(Tokenizer(spec(TokenizerKind::kExternalVocab)), ConfigError);
}

TEST(Ngrams, Bigrams) {
  const auto g = ngrams({"a", "b", "c"}, 2);
  EXPECT_EQ(g.total, 2u);
  EXPECT_EQ(g.count(ngram_key({"a", "b"}, 0, 2)), 1u);
  EXPECT_EQ(g.count(ngram_key({"b", "c"}, 0, 2)), 1u);
}

TEST(Ngrams, TooShortIsEmpty) {
  const auto g = ngrams({"a"}, 2);
  EXPECT_EQ(g.total, 0u);
  EXPECT_TRUE(g.counts.empty());
}

TEST(Ngrams, MultisetCounting) {
  EXPECT_EQ(ngrams({"a", "a", "a"}, 1).count("a"), 3u);
}

TEST(Ngrams, LengthIdentityProperty) {
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    TokenSeq s(rng() % 10);
    for (auto& tok : s) tok = std::string(1, "xyz"[rng() % 3]);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto g = ngrams(s, n);
      std::size_t sum = 0;
      for (const auto& [k, c] : g.counts) sum += c;
      const std::size_t expected = s.size() >= n ? s.size() - n + 1 : 0;
      EXPECT_EQ(g.total, expected);
      EXPECT_EQ(sum, expected);
    }
  }
}

TEST(Tokenize, KindNamesRoundTrip) {
  for (auto k : {TokenizerKind::kUnicodeWord, TokenizerKind::kWhitespace, TokenizerKind::kCharacter,
                 TokenizerKind::kExternalVocab}) {
    EXPECT_EQ(parse_tokenizer_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_tokenizer_kind("bpe"), ConfigError);
}

}  // namespace
}  // namespace sumaug
