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

#ifndef SUMAUG_CORPUS_H_
#define SUMAUG_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sumaug/records.h"

namespace sumaug {

inline constexpr std::size_t kDefaultMinSentences = 5;

struct CorpusStats {
  std::string lang;
  std::size_t n_docs = 0;
  std::size_t n_kept = 0;
  // sentence count -> number of documents (before filtering)
  std::map<std::size_t, std::size_t> sentence_histogram;
};

// Streaming filter that drops documents with fewer than `min_sentences`
// body sentences (titles are not counted).
class MinSentenceFilter {
 public:
  explicit MinSentenceFilter(std::size_t min_sentences = kDefaultMinSentences)
      : min_sentences_(min_sentences) {}

  // Records the document in the statistics and returns whether it is kept.
  bool accept(const ArticleRecord& record);

  std::size_t min_sentences() const { return min_sentences_; }
  // Per-language statistics, ordered by language code.
  const std::map<std::string, CorpusStats>& stats() const { return stats_; }
  CorpusStats totals() const;

 private:
  std::size_t min_sentences_;
  std::map<std::string, CorpusStats> stats_;
};

struct FilterResult {
  std::vector<ArticleRecord> kept;
  std::map<std::string, CorpusStats> stats;
};

FilterResult filter_min_sentences(std::vector<ArticleRecord> records,
                                  std::size_t min_sentences = kDefaultMinSentences);

// CSV with one row per language:
// lang,n_docs,n_kept,min_sentences,histogram
// where histogram is `sentences:count` entries separated by spaces.
std::string stats_csv(const std::map<std::string, CorpusStats>& stats, std::size_t min_sentences);

}  // namespace sumaug

#endif  // SUMAUG_CORPUS_H_
