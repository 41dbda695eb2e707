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

#ifndef SUMAUG_METRICS_H_
#define SUMAUG_METRICS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "sumaug/tokenize.h"

namespace sumaug {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Set when a side has too few tokens to form any unit; all values are 0.
  bool degenerate = false;
};

// F1 = 2PR / (P + R), 0 when P + R = 0.
double f1_score(double precision, double recall);

// Clipped n-gram overlap: sum over n-grams of min(count_cand, count_ref).
RougeScore rouge_n(const TokenSeq& candidate, const TokenSeq& reference, std::size_t n);

// Longest common subsequence over the whole token sequences.
RougeScore rouge_l(const TokenSeq& candidate, const TokenSeq& reference);
std::size_t lcs_length(const TokenSeq& a, const TokenSeq& b);

struct NoveltyScore {
  std::size_t n = 1;
  double value = 0.0;  // percentage in [0, 100]
};

// Percentage of summary n-gram occurrences whose n-gram never occurs in the
// document. Throws DataError when the summary has fewer than n tokens.
NoveltyScore novelty(const TokenSeq& summary, const TokenSeq& document, std::size_t n = 1);

// Throws DataError for an empty list.
double mean_length(std::span<const TokenSeq> summaries);

using Embedding = std::vector<double>;

struct GreedyMatchScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// BERTScore-style aggregation over externally computed token vectors:
// recall averages, over reference vectors, the best cosine to any candidate
// vector; precision does the same from the candidate side. Throws DataError
// for empty sides, mismatched dimensions or zero vectors.
GreedyMatchScore greedy_match_score(std::span<const Embedding> candidate,
                                    std::span<const Embedding> reference);

}  // namespace sumaug

#endif  // SUMAUG_METRICS_H_
