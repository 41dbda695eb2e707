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

#include <random>

#include "oracles.h"
#include "sumaug/error.h"
#include "sumaug/metrics.h"

namespace sumaug {
namespace {

TokenSeq random_seq(std::mt19937& rng, std::size_t max_len, int alphabet) {
  TokenSeq s(rng() % (max_len + 1));
  for (auto& t : s) t = std::string(1, static_cast<char>('a' + rng() % alphabet));
  return s;
}

TEST(RougeN, Identity) {
  const TokenSeq x = {"a", "b", "c"};
  const auto r = rouge_n(x, x, 1);
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f1, 1.0);
}

TEST(RougeN, HandCountedUnigrams) {
  const auto r = rouge_n({"a", "b", "d"}, {"a", "b", "c", "d"}, 1);
  EXPECT_DOUBLE_EQ(r.precision, 1.0);
  EXPECT_DOUBLE_EQ(r.recall, 0.75);
  EXPECT_DOUBLE_EQ(r.f1, 6.0 / 7.0);
}

TEST(RougeN, ClippedCounts) {
  const auto r = rouge_n({"a", "a", "a"}, {"a", "b"}, 1);
  EXPECT_DOUBLE_EQ(r.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
}

TEST(RougeN, Disjoint) { EXPECT_EQ(rouge_n({"x"}, {"y"}, 1).f1, 0.0); }

TEST(RougeN, DegenerateShortSide) {
  const auto r = rouge_n({"a"}, {"a", "b"}, 2);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.f1, 0.0);
}

TEST(RougeN, SymmetryProperty) {
  std::mt19937 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const auto x = random_seq(rng, 10, 4);
    const auto y = random_seq(rng, 10, 4);
    for (std::size_t n = 1; n <= 3; ++n) {
      EXPECT_EQ(rouge_n(x, y, n).precision, rouge_n(y, x, n).recall);
    }
  }
}

TEST(RougeN, MatchesMultisetOracle) {
  std::mt19937 rng(9);
  for (int t = 0; t < 500; ++t) {
    const auto x = random_seq(rng, 12, 6);
    const auto y = random_seq(rng, 12, 6);
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto got = rouge_n(x, y, n);
      const auto want = oracle::rouge_n(x, y, n);
      EXPECT_NEAR(got.precision, want.p, 1e-12);
      EXPECT_NEAR(got.recall, want.r, 1e-12);
      EXPECT_NEAR(got.f1, want.f, 1e-12);
    }
  }
}

TEST(RougeL, Identity) { EXPECT_EQ(rouge_l({"a", "b"}, {"a", "b"}).f1, 1.0); }

TEST(RougeL, HandExample) {
  const auto r = rouge_l({"a", "c", "e", "b"}, {"a", "b", "c", "d", "e"});
  EXPECT_EQ(lcs_length({"a", "c", "e", "b"}, {"a", "b", "c", "d", "e"}), 3u);
  EXPECT_DOUBLE_EQ(r.recall, 0.6);
  EXPECT_DOUBLE_EQ(r.precision, 0.75);
  EXPECT_DOUBLE_EQ(r.f1, 2.0 / 3.0);
}

TEST(RougeL, ReversedDistinct) {
  EXPECT_EQ(lcs_length({"e", "d", "c", "b", "a"}, {"a", "b", "c", "d", "e"}), 1u);
}

TEST(RougeL, MatchesDpOracle) {
  std::mt19937 rng(13);
  for (int t = 0; t < 500; ++t) {
    const auto x = random_seq(rng, 12, 6);
    const auto y = random_seq(rng, 12, 6);
    EXPECT_EQ(lcs_length(x, y), oracle::lcs(x, y));
    const auto got = rouge_l(x, y);
    const auto want = oracle::rouge_l(x, y);
    EXPECT_NEAR(got.f1, want.f, 1e-12);
  }
}

TEST(Novelty, Bounds) {
  EXPECT_EQ(novelty({"a", "b"}, {"a", "b", "c"}).value, 0.0);
  EXPECT_EQ(novelty({"x", "y"}, {"a", "b", "c"}).value, 100.0);
  EXPECT_DOUBLE_EQ(novelty({"a", "d"}, {"a", "b", "c"}).value, 50.0);
}

TEST(Novelty, Bigrams) {
  EXPECT_DOUBLE_EQ(novelty({"a", "b", "d"}, {"a", "b", "c"}, 2).value, 50.0);
  EXPECT_THROW(novelty({"a"}, {"a", "b"}, 2), DataError);
}

TEST(MeanLength, Basics) {
  const std::vector<TokenSeq> one = {TokenSeq(7, "w")};
  EXPECT_EQ(mean_length(one), 7.0);
  const std::vector<TokenSeq> two = {TokenSeq(4, "w"), TokenSeq(6, "w")};
  EXPECT_EQ(mean_length(two), 5.0);
  EXPECT_THROW(mean_length(std::vector<TokenSeq>{}), DataError);
}

TEST(MeanLength, TokenizerChangesKhmerLength) {
  const std::string text = "ខ្ញុំស្រលាញ់ភាសាខ្មែរ";
  TokenizerSpec word;
  word.unspaced_fallback = false;
  TokenizerSpec chars;
  chars.kind = TokenizerKind::kCharacter;
  const std::vector<TokenSeq> a = {tokenize(text, word)};
  const std::vector<TokenSeq> b = {tokenize(text, chars)};
  // Dictionary words: ខ្ញុំ ស្រលាញ់ ភាសាខ្មែរ.
  EXPECT_EQ(mean_length(a), 3.0);
  EXPECT_GT(mean_length(b), mean_length(a));
}

TEST(GreedyMatch, SelfMatch) {
  const std::vector<Embedding> v = {{1, 0, 0}, {0, 1, 0}};
  const auto s = greedy_match_score(v, v);
  EXPECT_NEAR(s.precision, 1.0, 1e-12);
  EXPECT_NEAR(s.recall, 1.0, 1e-12);
  EXPECT_NEAR(s.f1, 1.0, 1e-12);
}

TEST(GreedyMatch, Orthogonal) {
  const std::vector<Embedding> a = {{1, 0}};
  const std::vector<Embedding> b = {{0, 1}};
  EXPECT_EQ(greedy_match_score(a, b).f1, 0.0);
}

TEST(GreedyMatch, MatchesAllPairsOracle) {
  const std::vector<Embedding> cand = {{1, 2, 0}, {0.5, -1, 3}};
  const std::vector<Embedding> ref = {{2, 1, 1}, {0, 0, 1}, {-1, 1, 0.5}};
  double p = 0, r = 0;
  for (const auto& c : cand) {
    double best = -2;
    for (const auto& x : ref) best = std::max(best, oracle::cosine(c, x));
    p += best;
  }
  for (const auto& x : ref) {
    double best = -2;
    for (const auto& c : cand) best = std::max(best, oracle::cosine(c, x));
    r += best;
  }
  p /= cand.size();
  r /= ref.size();
  const auto s = greedy_match_score(cand, ref);
  EXPECT_NEAR(s.precision, p, 1e-9);
  EXPECT_NEAR(s.recall, r, 1e-9);
  EXPECT_NEAR(s.f1, 2 * p * r / (p + r), 1e-9);
}

TEST(GreedyMatch, RejectsBadInput) {
  const std::vector<Embedding> a = {{1, 0}};
  const std::vector<Embedding> b = {{1, 0, 0}};
  const std::vector<Embedding> z = {{0, 0}};
  EXPECT_THROW(greedy_match_score(a, b), DataError);
  EXPECT_THROW(greedy_match_score(a, z), DataError);
  EXPECT_THROW(greedy_match_score({}, a), DataError);
}

}  // namespace
}  // namespace sumaug
