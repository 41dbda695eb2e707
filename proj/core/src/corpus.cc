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

#include "sumaug/corpus.h"

#include <fmt/format.h>

namespace sumaug {

bool MinSentenceFilter::accept(const ArticleRecord& record) {
  CorpusStats& s = stats_[record.lang];
  s.lang = record.lang;
  ++s.n_docs;
  ++s.sentence_histogram[record.sentences.size()];
  const bool keep = record.sentences.size() >= min_sentences_;
  if (keep) ++s.n_kept;
  return keep;
}

CorpusStats MinSentenceFilter::totals() const {
  CorpusStats all;
  all.lang = "all";
  for (const auto& [lang, s] : stats_) {
    all.n_docs += s.n_docs;
    all.n_kept += s.n_kept;
    for (const auto& [k, v] : s.sentence_histogram) all.sentence_histogram[k] += v;
  }
  return all;
}

FilterResult filter_min_sentences(std::vector<ArticleRecord> records, std::size_t min_sentences) {
  MinSentenceFilter filter(min_sentences);
  FilterResult result;
  for (auto& r : records) {
    if (filter.accept(r)) result.kept.push_back(std::move(r));
  }
  result.stats = filter.stats();
  return result;
}

std::string stats_csv(const std::map<std::string, CorpusStats>& stats, std::size_t min_sentences) {
  std::string out = "lang,n_docs,n_kept,min_sentences,histogram\n";
  for (const auto& [lang, s] : stats) {
    std::string hist;
    for (const auto& [k, v] : s.sentence_histogram) {
      if (!hist.empty()) hist.push_back(' ');
      hist += fmt::format("{}:{}", k, v);
    }
    out += fmt::format("{},{},{},{},{}\n", lang, s.n_docs, s.n_kept, min_sentences, hist);
  }
  return out;
}

}  // namespace sumaug
