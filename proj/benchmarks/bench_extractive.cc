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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "sumaug/extractive.h"
#include "sumaug/records.h"
#include "sumaug/segment.h"

namespace {

sumaug::ArticleRecord random_article(std::size_t sentences) {
  std::mt19937_64 rng(sentences);
  std::string text;
  for (std::size_t s = 0; s < sentences; ++s) {
    const std::size_t len = 8 + rng() % 16;
    for (std::size_t w = 0; w < len; ++w) text += (w ? " w" : "W") + std::to_string(rng() % 300);
    text += ". ";
  }
  return sumaug::make_article("bench", "eng", text);
}

void BM_ExtractSummary(benchmark::State& state) {
  const auto article = random_article(static_cast<std::size_t>(state.range(0)));
  const sumaug::LexRankConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(sumaug::extract_summary(article, cfg));
}
BENCHMARK(BM_ExtractSummary)->Arg(10)->Arg(40)->Arg(160);

void BM_SentenceSegmentation(benchmark::State& state) {
  const auto article = random_article(200);
  for (auto _ : state) benchmark::DoNotOptimize(sumaug::segment_sentences(article.text, "eng"));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(article.text.size()));
}
BENCHMARK(BM_SentenceSegmentation);

}  // namespace
