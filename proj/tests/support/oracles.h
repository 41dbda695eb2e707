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

// Independent reference implementations used only by tests. They favor
// obviousness over speed and share no code with the library.
#ifndef SUMAUG_TESTS_ORACLES_H_
#define SUMAUG_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sumaug::oracle {

inline std::filesystem::path source_dir() { return SUMAUG_SOURCE_DIR; }
inline std::filesystem::path binary_dir() { return SUMAUG_BINARY_DIR; }

using Seq = std::vector<std::string>;

// All n-grams as token vectors, sorted so equal n-grams are adjacent.
inline std::vector<Seq> all_ngrams(const Seq& s, std::size_t n) {
  std::vector<Seq> out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.emplace_back(s.begin() + i, s.begin() + i + n);
  std::sort(out.begin(), out.end());
  return out;
}

// Multiset intersection size by merging two sorted lists.
inline std::size_t multiset_overlap(const Seq& a, const Seq& b, std::size_t n) {
  const auto x = all_ngrams(a, n);
  const auto y = all_ngrams(b, n);
  std::size_t i = 0, j = 0, hits = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) {
      ++hits, ++i, ++j;
    } else if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return hits;
}

struct Prf {
  double p = 0, r = 0, f = 0;
};

inline Prf prf(double hits, double cand_total, double ref_total) {
  Prf out;
  if (cand_total > 0) out.p = hits / cand_total;
  if (ref_total > 0) out.r = hits / ref_total;
  if (out.p + out.r > 0) out.f = 2 * out.p * out.r / (out.p + out.r);
  return out;
}

inline Prf rouge_n(const Seq& cand, const Seq& ref, std::size_t n) {
  const double hits = static_cast<double>(multiset_overlap(cand, ref, n));
  const auto total = [n](const Seq& s) { return s.size() >= n ? double(s.size() - n + 1) : 0.0; };
  return prf(hits, total(cand), total(ref));
}

// Full (|a|+1) x (|b|+1) table.
inline std::size_t lcs(const Seq& a, const Seq& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t[a.size()][b.size()];
}

inline Prf rouge_l(const Seq& cand, const Seq& ref) {
  return prf(static_cast<double>(lcs(cand, ref)), double(cand.size()), double(ref.size()));
}

// Stationary vector of G = (1-d)/n + d * M^T by repeated multiplication of
// the explicit dense matrix, where M is built from raw weights.
inline std::vector<double> dense_centrality(const std::vector<double>& weights, std::size_t n,
                                            bool threshold_mode, double threshold, double d) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = weights[i * n + j];
      const double e = threshold_mode ? (w > threshold ? 1.0 : 0.0) : w;
      m[i * n + j] = e;
      row += e;
    }
    if (row == 0) {
      m[i * n + i] = 1.0;
      row = 1.0;
    }
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] /= row;
  }
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i * n + j] = (1 - d) / double(n) + d * m[j * n + i];
  }
  std::vector<double> p(n, 1.0 / double(n)), q(n);
  for (int it = 0; it < 100000; ++it) {
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = 0;
      for (std::size_t j = 0; j < n; ++j) q[i] += g[i * n + j] * p[j];
    }
    for (std::size_t i = 0; i < n; ++i) change += std::abs(q[i] - p[i]);
    p.swap(q);
    if (change < 1e-15) break;
  }
  return p;
}

// Standard error of the resample mean over every one of the n^n equally
// likely index tuples.
inline double exact_bootstrap_se(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  double s = 0, s2 = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i, c /= n) sum += v[c % n];
    const double mean = sum / double(n);
    s += mean;
    s2 += mean * mean;
  }
  const double mu = s / double(total);
  return std::sqrt(std::max(0.0, s2 / double(total) - mu * mu));
}

// Greedy longest-match by trying every candidate length from the longest.
inline Seq greedy_segment(const std::string& text, const std::vector<std::string>& units) {
  Seq out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    for (const auto& u : units) {
      if (u.size() > best && text.compare(pos, u.size(), u) == 0) best = u.size();
    }
    if (best == 0) best = 1;  // ASCII-only inputs in tests
    out.push_back(text.substr(pos, best));
    pos += best;
  }
  return out;
}

inline double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return dot / std::sqrt(na * nb);
}

}  // namespace sumaug::oracle

#endif  // SUMAUG_TESTS_ORACLES_H_
