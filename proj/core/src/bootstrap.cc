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

#include "sumaug/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "sumaug/error.h"
#include "sumaug/random.h"

namespace sumaug {
namespace {

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Sample standard deviation (B - 1 denominator); 0 for a single resample.
double stddev(std::span<const double> v, double mean) {
  if (v.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace

std::vector<double> resample_means(std::span<const double> values, const BootstrapConfig& config) {
  if (values.empty()) throw DataError("bootstrap needs at least one value");
  if (config.resamples < 1) throw ConfigError("bootstrap resample count must be at least 1");
  const std::size_t n = values.size();
  const std::size_t B = config.resamples;
  std::vector<double> means(B);

  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t r = first; r < last; ++r) {
      Xoshiro256 rng = Xoshiro256::for_stream(config.seed, r);
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += values[rng.below(n)];
      means[r] = sum / static_cast<double>(n);
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, B);
  if (threads == 1) {
    work(0, B);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (B + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t first = t * chunk;
      const std::size_t last = std::min(B, first + chunk);
      if (first < last) pool.emplace_back(work, first, last);
    }
  }
  return means;
}

static BootstrapResult summarize(std::span<const double> values, std::span<const double> means,
                          const BootstrapConfig& config) {
  BootstrapResult out;
  out.mean = mean_of(means);
  out.se = stddev(means, out.mean);
  out.sample_mean = mean_of(values);
  out.n = values.size();
  out.resamples = config.resamples;
  out.seed = config.seed;
  // A constant input must report exactly its value and zero spread.
  if (std::all_of(values.begin(), values.end(), [&](double v) { return v == values[0]; })) {
    out.mean = values[0];
    out.se = 0.0;
  }
  return out;
}

BootstrapResult bootstrap_mean_se(std::span<const double> values, const BootstrapConfig& config) {
  const std::vector<double> means = resample_means(values, config);
  return summarize(values, means, config);
}

PairedDelta paired_delta(std::span<const double> a, std::span<const double> b,
                         const BootstrapConfig& config) {
  if (a.size() != b.size()) throw DataError("paired_delta needs equally long series");
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = b[i] - a[i];
  const std::vector<double> means = resample_means(diff, config);
  const BootstrapResult r = summarize(diff, means, config);

  PairedDelta out;
  out.delta_mean = r.mean;
  out.se = r.se;
  out.sample_delta = r.sample_mean;
  out.n = r.n;
  out.resamples = r.resamples;
  out.seed = r.seed;
  std::size_t agree = 0;
  for (double m : means) {
    if (out.sample_delta > 0.0 ? m > 0.0 : out.sample_delta < 0.0 ? m < 0.0 : m == 0.0) ++agree;
  }
  out.sign_consistency = static_cast<double>(agree) / static_cast<double>(means.size());
  return out;
}

PairedDelta paired_delta(const std::map<std::string, double>& a,
                         const std::map<std::string, double>& b, const BootstrapConfig& config) {
  std::vector<std::string> only;
  for (const auto& [id, v] : a) {
    if (!b.contains(id)) only.push_back(id);
  }
  for (const auto& [id, v] : b) {
    if (!a.contains(id)) only.push_back(id);
  }
  if (!only.empty()) {
    std::string msg = "paired_delta: ids not present in both series:";
    for (std::size_t i = 0; i < only.size() && i < 10; ++i) msg += " " + only[i];
    if (only.size() > 10) msg += " ...";
    throw DataError(msg);
  }
  std::vector<double> va, vb;
  for (const auto& [id, v] : a) {
    va.push_back(v);
    vb.push_back(b.at(id));
  }
  return paired_delta(va, vb, config);
}

}  // namespace sumaug
