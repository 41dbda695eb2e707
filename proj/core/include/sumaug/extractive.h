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

#ifndef SUMAUG_EXTRACTIVE_H_
#define SUMAUG_EXTRACTIVE_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sumaug/records.h"
#include "sumaug/tokenize.h"

namespace sumaug {

// Inverse document frequencies, idf(w) = ln(N / (df(w) + 1)).
class IdfTable {
 public:
  IdfTable() = default;
  IdfTable(std::size_t n_docs, std::map<std::string, std::size_t> df);

  // Each token sequence counts as one "document".
  static IdfTable from_token_sets(const std::vector<TokenSeq>& docs);
  // Fixed values, mostly for tests.
  static IdfTable from_values(std::map<std::string, double> idf);

  double idf(const std::string& term) const;
  std::size_t n_docs() const { return n_docs_; }

 private:
  std::size_t n_docs_ = 0;
  std::map<std::string, std::size_t> df_;
  std::map<std::string, double> fixed_;
  bool use_fixed_ = false;
};

// Term -> term frequency. Values need not be integral.
using TermVector = std::map<std::string, double>;

TermVector term_frequencies(const TokenSeq& tokens);

enum class GraphMode { kThreshold, kContinuous };

std::string_view to_string(GraphMode mode);
GraphMode parse_graph_mode(std::string_view name);

// Symmetric cosine-similarity matrix over sentences, row-major.
struct SimilarityGraph {
  std::size_t n = 0;
  std::vector<double> weights;
  GraphMode mode = GraphMode::kThreshold;
  double threshold = 0.1;

  double at(std::size_t i, std::size_t j) const { return weights[i * n + j]; }
};

// cos(i,j) = sum_w tf_i(w) tf_j(w) idf(w)^2 / (|v_i| |v_j|), v_i(w) = tf_i(w) idf(w).
// Diagonal entries are 1; rows whose vector is zero have no other similarity.
// Throws DataError when every vector is zero.
SimilarityGraph cosine_graph(const std::vector<TermVector>& sentences, const IdfTable& idf,
                             GraphMode mode = GraphMode::kThreshold, double threshold = 0.1);

SimilarityGraph tfidf_cosine_graph(const std::vector<TokenSeq>& sentences, const IdfTable& idf,
                                   GraphMode mode = GraphMode::kThreshold, double threshold = 0.1);

// Row-stochastic transition matrix. Threshold mode keeps edges with weight
// strictly above the threshold (weight 1 each); continuous mode keeps the
// cosine weights. A row left without entries links to itself only.
std::vector<double> transition_matrix(const SimilarityGraph& graph);

struct PowerIterationOptions {
  double damping = 0.85;  // probability of following an edge
  double tol = 1e-6;      // L1 bound on the distance to the fixed point
  int max_iter = 100;
};

struct CentralityScores {
  std::vector<double> p;
  double damping = 0.85;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Stationary distribution of p = (1-d)/n + d * M^T p, started from uniform.
// When max_iter is reached the last iterate is returned with converged=false.
CentralityScores power_iteration(const SimilarityGraph& graph,
                                 const PowerIterationOptions& options = {});

struct LexRankConfig {
  std::size_t k = 2;
  GraphMode mode = GraphMode::kThreshold;
  double threshold = 0.1;
  PowerIterationOptions power;
  TokenizerSpec tokenizer;
};

// Indices of the k highest scores (ties go to the smaller index), returned
// in ascending index order.
std::vector<std::size_t> select_top_k(const std::vector<double>& scores, std::size_t k);

// Top-k sentences of the document in document order. When `corpus_idf` is
// null the document's own sentences serve as the IDF collection.
std::vector<std::string> extract_summary(const ArticleRecord& record, const LexRankConfig& config,
                                         const IdfTable* corpus_idf = nullptr);

// IDF over whole documents of a corpus.
IdfTable corpus_idf(const std::vector<ArticleRecord>& records, const Tokenizer& tokenizer);

}  // namespace sumaug

#endif  // SUMAUG_EXTRACTIVE_H_
