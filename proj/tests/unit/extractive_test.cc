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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "oracles.h"
#include "sumaug/error.h"
#include "sumaug/extractive.h"
#include "sumaug/records.h"

namespace sumaug {
namespace {

SimilarityGraph graph_of(const std::vector<std::string>& sentences, GraphMode mode = GraphMode::kThreshold) {
  Tokenizer tok;
  std::vector<TokenSeq> toks;
  for (const auto& s : sentences) toks.push_back(tok(s));
  return tfidf_cosine_graph(toks, IdfTable::from_token_sets(toks), mode);
}

TEST(Idf, Formula) {
  const auto idf = IdfTable::from_token_sets({{"a", "b"}, {"a"}, {"c"}, {"d"}});
  EXPECT_DOUBLE_EQ(idf.idf("a"), std::log(4.0 / 3.0));
  EXPECT_DOUBLE_EQ(idf.idf("b"), std::log(4.0 / 2.0));
  EXPECT_DOUBLE_EQ(idf.idf("zzz"), std::log(4.0 / 1.0));
}

TEST(Cosine, IdenticalAndDisjoint) {
  const auto idf = IdfTable::from_values({{"x", 1.0}, {"y", 2.0}, {"z", 1.5}});
  const auto g = cosine_graph({{{"x", 1}, {"y", 1}}, {{"x", 1}, {"y", 1}}, {{"z", 1}}}, idf,
                              GraphMode::kContinuous);
  EXPECT_NEAR(g.at(0, 1), 1.0, 1e-12);
  EXPECT_EQ(g.at(0, 2), 0.0);
  EXPECT_EQ(g.at(1, 2), 0.0);
}

TEST(Cosine, HandComputedCatToy) {
  // v1 = (cat 1, sat 2), v2 = (cat 1, ran 3), v3 = (dog 1):
  // cos(1,2) = 1 / (sqrt(5) sqrt(10)) = 1 / sqrt(50).
  const auto idf = IdfTable::from_values({{"cat", 1.0}, {"sat", 2.0}, {"ran", 3.0}, {"dog", 1.0}});
  const auto g = cosine_graph({{{"cat", 1}, {"sat", 1}}, {{"cat", 1}, {"ran", 1}}, {{"dog", 1}}}, idf,
                              GraphMode::kContinuous);
  EXPECT_NEAR(g.at(0, 1), 0.14142135623730950, 1e-9);
  EXPECT_NEAR(g.at(1, 0), 0.14142135623730950, 1e-9);
  EXPECT_NEAR(g.at(0, 2), 0.0, 1e-9);
  EXPECT_NEAR(g.at(1, 2), 0.0, 1e-9);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(g.at(i, i), 1.0, 1e-9);
}

TEST(Cosine, MatchesAllPairsOracleWithRepeatedTerms) {
  const auto idf = IdfTable::from_values({{"a", 0.5}, {"b", 1.25}, {"c", 2.0}});
  const std::vector<TermVector> tv = {{{"a", 2}, {"b", 1}}, {{"b", 3}, {"c", 1}}, {{"a", 1}, {"c", 4}}};
  const auto g = cosine_graph(tv, idf, GraphMode::kContinuous);
  const std::vector<std::vector<double>> dense = {{1.0, 1.25, 0}, {0, 3.75, 2.0}, {0.5, 0, 8.0}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(g.at(i, j), oracle::cosine(dense[i], dense[j]), 1e-12);
    }
  }
}

TEST(Cosine, AllZeroVectorsThrow) {
  const auto idf = IdfTable::from_values({{"a", 0.0}});
  EXPECT_THROW(cosine_graph({{{"a", 1}}, {{"a", 1}}}, idf), DataError);
}

TEST(Transition, RowsAreStochastic) {
  const auto g = graph_of({"The cat sat.", "A cat ran.", "Dogs bark loudly.", "The cat sat again."});
  const auto m = transition_matrix(g);
  for (std::size_t i = 0; i < g.n; ++i) {
    double sum = 0;
    for (std::size_t j = 0; j < g.n; ++j) sum += m[i * g.n + j];
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(PowerIteration, IdenticalSentencesAreUniform) {
  const auto g = graph_of({"Same words here.", "Same words here.", "Same words here.", "Same words here."});
  const auto c = power_iteration(g);
  for (double p : c.p) EXPECT_NEAR(p, 0.25, 1e-12);
}

TEST(PowerIteration, SingleNode) {
  SimilarityGraph g;
  g.n = 1;
  g.weights = {1.0};
  EXPECT_EQ(power_iteration(g).p, std::vector<double>{1.0});
}

TEST(PowerIteration, ThreeNodeToyMatchesDenseOracle) {
  SimilarityGraph g;
  g.n = 3;
  g.mode = GraphMode::kContinuous;
  g.weights = {1.0, 0.5, 0.0, 0.5, 1.0, 0.3, 0.0, 0.3, 1.0};
  const auto c = power_iteration(g);
  EXPECT_TRUE(c.converged);
  const auto ref = oracle::dense_centrality(g.weights, 3, false, g.threshold, 0.85);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(c.p[i], ref[i], 1e-6);
}

TEST(PowerIteration, ReportsNonConvergence) {
  SimilarityGraph g;
  g.n = 3;
  g.mode = GraphMode::kContinuous;
  g.weights = {1.0, 0.9, 0.0, 0.9, 1.0, 0.1, 0.0, 0.1, 1.0};
  PowerIterationOptions opts;
  opts.max_iter = 1;
  opts.tol = 1e-15;
  const auto c = power_iteration(g, opts);
  EXPECT_FALSE(c.converged);
  EXPECT_EQ(c.iterations, 1);
}

TEST(SelectTopK, TiesGoToSmallerIndex) {
  EXPECT_EQ(select_top_k({0.2, 0.5, 0.5, 0.1}, 2), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(select_top_k({0.3, 0.3, 0.3}, 2), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(select_top_k({0.9, 0.1, 0.8}, 5), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Extract, TwoSentenceDocumentReturnsBoth) {
  const auto a = make_article("d", "eng", "Second place. First place.");
  EXPECT_EQ(extract_summary(a, {}), (std::vector<std::string>{"Second place.", "First place."}));
}

TEST(Extract, DefaultKIsTwo) { EXPECT_EQ(LexRankConfig{}.k, 2u); }

TEST(Extract, ToyOrderFollowsDocument) {
  // The hub outranks the isolated first sentence, which keeps its own mass
  // through the self link, so rank order and document order disagree.
  const std::vector<std::string> s = {
      "Rocks are heavy.", "Cat chased bird near fish.", "Fish swim river.",
      "Cat bird fish watched river.", "Bird sang loudly."};
  std::string text;
  for (const auto& x : s) text += x + " ";
  LexRankConfig cfg;
  cfg.mode = GraphMode::kContinuous;
  const auto g = graph_of(s, GraphMode::kContinuous);
  const auto ref = oracle::dense_centrality(g.weights, g.n, false, g.threshold, 0.85);
  const auto top = std::max_element(ref.begin(), ref.end()) - ref.begin();
  ASSERT_EQ(top, 3);
  std::vector<double> rest = ref;
  rest[3] = -1;
  ASSERT_EQ(std::max_element(rest.begin(), rest.end()) - rest.begin(), 0);
  EXPECT_EQ(extract_summary(make_article("t", "eng", text), cfg), (std::vector<std::string>{s[0], s[3]}));
}

TEST(Extract, VerbatimProperty) {
  std::mt19937 rng(3);
  const std::vector<std::string> words = {"alpha", "beta", "gamma", "delta", "eps", "zeta", "eta"};
  for (int t = 0; t < 200; ++t) {
    std::string text;
    const int n = 1 + static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i) {
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int w = 0; w < len; ++w) text += (w ? " " : "") + words[rng() % words.size()];
      text += ". ";
    }
    const auto a = make_article("r", "eng", text);
    LexRankConfig cfg;
    cfg.k = 1 + rng() % 3;
    std::vector<std::string> out;
    try {
      out = extract_summary(a, cfg);
    } catch (const DataError&) {
      continue;  // every word occurs in every sentence: no usable weights
    }
    EXPECT_EQ(out.size(), std::min<std::size_t>(cfg.k, a.sentences.size()));
    auto it = a.sentences.begin();
    for (const auto& s : out) {
      it = std::find(it, a.sentences.end(), s);
      ASSERT_NE(it, a.sentences.end()) << s;
      ++it;
    }
  }
}

TEST(Extract, IdenticalSentencesYieldFirstK) {
  const auto a = make_article("d", "eng", "Rain falls today. Rain falls today. Rain falls today.");
  LexRankConfig cfg;
  cfg.k = 2;
  EXPECT_EQ(extract_summary(a, cfg), (std::vector<std::string>{"Rain falls today.", "Rain falls today."}));
}

}  // namespace
}  // namespace sumaug
