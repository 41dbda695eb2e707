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

#include <string>
#include <vector>

#include "sumaug/langid.h"
#include "sumaug/records.h"

namespace {

const sumaug::LanguageIdentifier& identifier() {
  static const sumaug::LanguageIdentifier id = [] {
    std::vector<sumaug::LangProfile> profiles;
    for (const char* lang : {"eng", "kat", "khm"}) {
      const std::string path = std::string(SUMAUG_SOURCE_DIR) + "/data/langid/seeds/" + lang + ".txt";
      profiles.push_back(sumaug::train_profile(lang, sumaug::read_file(path)));
    }
    return sumaug::LanguageIdentifier(std::move(profiles));
  }();
  return id;
}

void BM_Classify(benchmark::State& state) {
  const std::string text = "The ministry said the new bridge will open to traffic next spring.";
  for (auto _ : state) benchmark::DoNotOptimize(identifier().classify(text));
}
BENCHMARK(BM_Classify);

void BM_EnglishProportion(benchmark::State& state) {
  const std::string text =
      "Here is the summary: მთავრობამ ახალი გზის მშენებლობა დაიწყო. The road opens in May. "
      "სკოლები დაიხურა.";
  for (auto _ : state) benchmark::DoNotOptimize(sumaug::english_proportion(text, identifier(), "kat"));
}
BENCHMARK(BM_EnglishProportion);

}  // namespace
