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

#include <cmath>
#include <vector>

#include "sumaug/bootstrap.h"

namespace {

void BM_BootstrapMeanSe(benchmark::State& state) {
  std::vector<double> values(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::fmod(0.37 * double(i), 1.0);
  sumaug::BootstrapConfig cfg;
  cfg.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sumaug::bootstrap_mean_se(values, cfg));
}
BENCHMARK(BM_BootstrapMeanSe)->Args({100, 1})->Args({1000, 1})->Args({1000, 4});

}  // namespace
