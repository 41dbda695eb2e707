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

#include "sumaug/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "sumaug/error.h"

namespace sumaug {

double f1_score(double precision, double recall) {
  const double denom = precision + recall;
  return denom == 0.0 ? 0.0 : 2.0 * precision * recall / denom;
}

RougeScore rouge_n(const TokenSeq& candidate, const TokenSeq& reference, std::size_t n) {
  const NgramCounts cand = ngrams(candidate, n);
  const NgramCounts ref = ngrams(reference, n);
  RougeScore s;
  if (cand.total == 0 || ref.total == 0) {
    s.degenerate = true;
    return s;
  }
  std::size_t overlap = 0;
  const auto& smaller = cand.counts.size() <= ref.counts.size() ? cand : ref;
  const auto& larger = cand.counts.size() <= ref.counts.size() ? ref : cand;
  for (const auto& [gram, count] : smaller.counts) overlap += std::min(count, larger.count(gram));
  s.precision = static_cast<double>(overlap) / static_cast<double>(cand.total);
  s.recall = static_cast<double>(overlap) / static_cast<double>(ref.total);
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

std::size_t lcs_length(const TokenSeq& a, const TokenSeq& b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = 0;  // row[j-1] of the previous row
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

RougeScore rouge_l(const TokenSeq& candidate, const TokenSeq& reference) {
  RougeScore s;
  if (candidate.empty() || reference.empty()) {
    s.degenerate = true;
    return s;
  }
  const double l = static_cast<double>(lcs_length(candidate, reference));
  s.precision = l / static_cast<double>(candidate.size());
  s.recall = l / static_cast<double>(reference.size());
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

NoveltyScore novelty(const TokenSeq& summary, const TokenSeq& document, std::size_t n) {
  if (n == 0) throw ConfigError("n-gram order must be at least 1");
  if (summary.size() < n) {
    throw DataError("novelty: summary has " + std::to_string(summary.size()) +
                    " tokens, fewer than n=" + std::to_string(n));
  }
  std::unordered_set<std::string> doc_grams;
  for (std::size_t i = 0; i + n <= document.size(); ++i) doc_grams.insert(ngram_key(document, i, n));
  std::size_t novel = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i + n <= summary.size(); ++i) {
    ++total;
    if (!doc_grams.contains(ngram_key(summary, i, n))) ++novel;
  }
  return {n, 100.0 * static_cast<double>(novel) / static_cast<double>(total)};
}

double mean_length(std::span<const TokenSeq> summaries) {
  if (summaries.empty()) throw DataError("mean_length of an empty list");
  double total = 0.0;
  for (const auto& s : summaries) total += static_cast<double>(s.size());
  return total / static_cast<double>(summaries.size());
}

namespace {

double norm_of(const Embedding& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

// Mean over `from` of the best cosine against any vector of `to`.
double best_match_mean(const std::vector<double>& cos, std::size_t rows, std::size_t cols,
                       bool by_row) {
  const std::size_t outer = by_row ? rows : cols;
  const std::size_t inner = by_row ? cols : rows;
  double total = 0.0;
  for (std::size_t a = 0; a < outer; ++a) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < inner; ++b) {
      best = std::max(best, by_row ? cos[a * cols + b] : cos[b * cols + a]);
    }
    total += best;
  }
  return total / static_cast<double>(outer);
}

}  // namespace

GreedyMatchScore greedy_match_score(std::span<const Embedding> candidate,
                                    std::span<const Embedding> reference) {
  if (candidate.empty() || reference.empty()) throw DataError("greedy_match_score: empty side");
  const std::size_t dim = candidate.front().size();
  auto check = [&](std::span<const Embedding> side, std::vector<double>& norms) {
    for (const auto& v : side) {
      if (v.size() != dim) throw DataError("greedy_match_score: dimension mismatch");
      const double nv = norm_of(v);
      if (nv == 0.0) throw DataError("greedy_match_score: zero vector");
      norms.push_back(nv);
    }
  };
  std::vector<double> cand_norms, ref_norms;
  check(candidate, cand_norms);
  check(reference, ref_norms);

  const std::size_t rows = candidate.size();
  const std::size_t cols = reference.size();
  std::vector<double> cos(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double dot =
          std::inner_product(candidate[i].begin(), candidate[i].end(), reference[j].begin(), 0.0);
      cos[i * cols + j] = dot / (cand_norms[i] * ref_norms[j]);
    }
  }
  GreedyMatchScore s;
  s.precision = best_match_mean(cos, rows, cols, /*by_row=*/true);
  s.recall = best_match_mean(cos, rows, cols, /*by_row=*/false);
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

}  // namespace sumaug
