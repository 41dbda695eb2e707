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

#include "sumaug/extractive.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "sumaug/error.h"

namespace sumaug {

IdfTable::IdfTable(std::size_t n_docs, std::map<std::string, std::size_t> df)
    : n_docs_(n_docs), df_(std::move(df)) {}

IdfTable IdfTable::from_token_sets(const std::vector<TokenSeq>& docs) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    std::set<std::string> seen(doc.begin(), doc.end());
    for (const auto& t : seen) ++df[t];
  }
  return IdfTable(docs.size(), std::move(df));
}

IdfTable IdfTable::from_values(std::map<std::string, double> idf) {
  IdfTable t;
  t.fixed_ = std::move(idf);
  t.use_fixed_ = true;
  return t;
}

double IdfTable::idf(const std::string& term) const {
  if (use_fixed_) {
    auto it = fixed_.find(term);
    return it == fixed_.end() ? 0.0 : it->second;
  }
  auto it = df_.find(term);
  const double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
  return std::log(static_cast<double>(n_docs_) / (df + 1.0));
}

TermVector term_frequencies(const TokenSeq& tokens) {
  TermVector tf;
  for (const auto& t : tokens) tf[t] += 1.0;
  return tf;
}

std::string_view to_string(GraphMode mode) {
  return mode == GraphMode::kThreshold ? "threshold" : "continuous";
}

GraphMode parse_graph_mode(std::string_view name) {
  if (name == "threshold") return GraphMode::kThreshold;
  if (name == "continuous") return GraphMode::kContinuous;
  throw ConfigError("unknown LexRank mode `" + std::string(name) + "`");
}

SimilarityGraph cosine_graph(const std::vector<TermVector>& sentences, const IdfTable& idf,
                             GraphMode mode, double threshold) {
  if (sentences.empty()) throw DataError("similarity graph needs at least one sentence");
  if (!(threshold >= 0.0 && threshold < 1.0)) throw ConfigError("threshold must be in [0, 1)");
  const std::size_t n = sentences.size();

  // Weighted vectors v_i(w) = tf_i(w) * idf(w).
  std::vector<std::map<std::string, double>> vecs(n);
  std::vector<double> norms(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [term, tf] : sentences[i]) {
      const double w = tf * idf.idf(term);
      if (w == 0.0) continue;
      vecs[i][term] = w;
      norms[i] += w * w;
    }
    norms[i] = std::sqrt(norms[i]);
  }
  if (std::all_of(norms.begin(), norms.end(), [](double x) { return x == 0.0; })) {
    throw DataError("all sentences are empty after weighting");
  }

  SimilarityGraph g;
  g.n = n;
  g.mode = mode;
  g.threshold = threshold;
  g.weights.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    g.weights[i * n + i] = 1.0;
    if (norms[i] == 0.0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norms[j] == 0.0) continue;
      const auto& small = vecs[i].size() <= vecs[j].size() ? vecs[i] : vecs[j];
      const auto& large = vecs[i].size() <= vecs[j].size() ? vecs[j] : vecs[i];
      double dot = 0.0;
      for (const auto& [term, w] : small) {
        auto it = large.find(term);
        if (it != large.end()) dot += w * it->second;
      }
      const double c = std::clamp(dot / (norms[i] * norms[j]), 0.0, 1.0);
      g.weights[i * n + j] = c;
      g.weights[j * n + i] = c;
    }
  }
  return g;
}

SimilarityGraph tfidf_cosine_graph(const std::vector<TokenSeq>& sentences, const IdfTable& idf,
                                   GraphMode mode, double threshold) {
  std::vector<TermVector> tfs;
  tfs.reserve(sentences.size());
  for (const auto& s : sentences) tfs.push_back(term_frequencies(s));
  return cosine_graph(tfs, idf, mode, threshold);
}

std::vector<double> transition_matrix(const SimilarityGraph& graph) {
  const std::size_t n = graph.n;
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = graph.at(i, j);
      double v = 0.0;
      if (graph.mode == GraphMode::kThreshold) {
        v = w > graph.threshold ? 1.0 : 0.0;
      } else {
        v = w;
      }
      m[i * n + j] = v;
      row_sum += v;
    }
    if (row_sum == 0.0) {
      m[i * n + i] = 1.0;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] /= row_sum;
  }
  return m;
}

CentralityScores power_iteration(const SimilarityGraph& graph,
                                 const PowerIterationOptions& options) {
  if (graph.n == 0) throw DataError("empty similarity graph");
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw ConfigError("damping must be in (0, 1)");
  }
  if (options.max_iter < 1) throw ConfigError("max_iter must be positive");
  const std::size_t n = graph.n;
  const std::vector<double> m = transition_matrix(graph);
  const double d = options.damping;
  const double jump = (1.0 - d) / static_cast<double>(n);
  // The map contracts by d in L1, so the distance from the latest iterate to
  // the fixed point is at most d/(1-d) times the last step. Stopping on that
  // bound makes tol an error guarantee, not just a step size.
  const double step_factor = std::max(1.0, d / (1.0 - d));

  CentralityScores out;
  out.damping = d;
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (int it = 1; it <= options.max_iter; ++it) {
    std::fill(next.begin(), next.end(), jump);
    for (std::size_t i = 0; i < n; ++i) {
      const double pi = d * p[i];
      if (pi == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) next[j] += pi * m[i * n + j];
    }
    // Renormalize away rounding drift.
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    double residual = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      next[j] /= total;
      residual += std::abs(next[j] - p[j]);
    }
    p.swap(next);
    out.iterations = it;
    out.residual = residual;
    if (step_factor * residual <= options.tol) {
      out.converged = true;
      break;
    }
  }
  out.p = std::move(p);
  return out;
}

std::vector<std::size_t> select_top_k(const std::vector<double>& scores, std::size_t k) {
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  // Scores within this distance count as tied.
  constexpr double kTieTolerance = 1e-12;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(scores[a] - scores[b]) <= kTieTolerance) return a < b;
    return scores[a] > scores[b];
  });
  idx.resize(std::min(k, idx.size()));
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<std::string> extract_summary(const ArticleRecord& record, const LexRankConfig& config,
                                         const IdfTable* corpus_idf) {
  const auto& sentences = record.sentences;
  if (sentences.empty()) throw DataError("document `" + record.id + "` has no sentences");
  if (sentences.size() <= config.k) return sentences;

  const Tokenizer tokenizer(config.tokenizer);
  std::vector<TokenSeq> tokens;
  tokens.reserve(sentences.size());
  for (const auto& s : sentences) tokens.push_back(tokenizer(s));

  const IdfTable local = corpus_idf ? IdfTable() : IdfTable::from_token_sets(tokens);
  const IdfTable& idf = corpus_idf ? *corpus_idf : local;

  std::vector<double> scores;
  try {
    const SimilarityGraph graph = tfidf_cosine_graph(tokens, idf, config.mode, config.threshold);
    scores = power_iteration(graph, config.power).p;
  } catch (const DataError&) {
    // Nothing to compare (e.g. every term has zero weight): fall back to the lead.
    scores.assign(sentences.size(), 1.0);
  }
  std::vector<std::string> out;
  for (std::size_t i : select_top_k(scores, config.k)) out.push_back(sentences[i]);
  return out;
}

IdfTable corpus_idf(const std::vector<ArticleRecord>& records, const Tokenizer& tokenizer) {
  std::vector<TokenSeq> docs;
  docs.reserve(records.size());
  for (const auto& r : records) docs.push_back(tokenizer(r.text));
  return IdfTable::from_token_sets(docs);
}

}  // namespace sumaug
