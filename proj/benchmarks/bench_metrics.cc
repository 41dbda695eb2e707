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

#include "sumaug/metrics.h"
#include "sumaug/tokenize.h"

namespace {

sumaug::TokenSeq random_seq(std::mt19937_64& rng, std::size_t len, int alphabet) {
  sumaug::TokenSeq s(len);
  for (auto& t : s) t = "w" + std::to_string(rng() % alphabet);
  return s;
}

void BM_RougeN(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto a = random_seq(rng, len, 200);
  const auto b = random_seq(rng, len, 200);
  for (auto _ : state) benchmark::DoNotOptimize(sumaug::rouge_n(a, b, 2));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(len));
}
BENCHMARK(BM_RougeN)->Arg(32)->Arg(128)->Arg(512);

void BM_RougeL(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto a = random_seq(rng, len, 200);
  const auto b = random_seq(rng, len, 200);
  for (auto _ : state) benchmark::DoNotOptimize(sumaug::rouge_l(a, b));
}
BENCHMARK(BM_RougeL)->Arg(32)->Arg(128)->Arg(512);

void BM_TokenizeUnicodeWord(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < 200; ++i) text += "The council approved the budget on Tuesday, officials said. ";
  const sumaug::Tokenizer tok;
  for (auto _ : state) benchmark::DoNotOptimize(tok(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_TokenizeUnicodeWord);

}  // namespace
