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

#ifndef SUMAUG_BOOTSTRAP_H_
#define SUMAUG_BOOTSTRAP_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sumaug {

inline constexpr std::size_t kDefaultBootstrapResamples = 500;
inline constexpr std::uint64_t kDefaultBootstrapSeed = 1;

struct BootstrapConfig {
  std::size_t resamples = kDefaultBootstrapResamples;
  std::uint64_t seed = kDefaultBootstrapSeed;
  // Worker threads; results do not depend on it.
  std::size_t threads = 1;
};

struct BootstrapResult {
  double mean = 0.0;         // average of the resample means
  double se = 0.0;           // standard deviation of the resample means
  double sample_mean = 0.0;  // plain mean of the input
  std::size_t n = 0;
  std::size_t resamples = 0;
  std::uint64_t seed = 0;
};

// Resample r draws n indices with replacement from the stream
// Xoshiro256::for_stream(seed, r).
std::vector<double> resample_means(std::span<const double> values, const BootstrapConfig& config);

BootstrapResult bootstrap_mean_se(std::span<const double> values,
                                  const BootstrapConfig& config = {});

struct PairedDelta {
  double delta_mean = 0.0;    // mean over resamples of mean(b - a)
  double se = 0.0;
  double sample_delta = 0.0;  // plain mean of b - a
  // Share of resamples whose delta has the sign of sample_delta (share of
  // exactly-zero deltas when sample_delta is 0).
  double sign_consistency = 0.0;
  std::size_t n = 0;
  std::size_t resamples = 0;
  std::uint64_t seed = 0;
};

PairedDelta paired_delta(std::span<const double> a, std::span<const double> b,
                         const BootstrapConfig& config = {});

// Aligns by example id; throws DataError listing ids present on one side only.
PairedDelta paired_delta(const std::map<std::string, double>& a,
                         const std::map<std::string, double>& b,
                         const BootstrapConfig& config = {});

}  // namespace sumaug

#endif  // SUMAUG_BOOTSTRAP_H_
