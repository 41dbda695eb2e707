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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "sumaug/bootstrap.h"
#include "sumaug/error.h"
#include "sumaug/random.h"

namespace sumaug {
namespace {

TEST(Random, SplitMix64ReferenceValues) {
  // First outputs for seed 0 as published with the reference implementation.
  SplitMix64 sm(0);
  EXPECT_EQ(sm.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(sm.next(), 0x6E789E6AA1B965F4ULL);
}

TEST(Random, XoshiroMatchesIndependentImplementation) {
  // Seed 1, state from SplitMix64; values from a separate transcription of
  // the reference algorithm.
  Xoshiro256 rng(1);
  EXPECT_EQ(rng.next(), 0xB3F2AF6D0FC710C5ULL);
  EXPECT_EQ(rng.next(), 0x853B559647364CEAULL);
  EXPECT_EQ(rng.next(), 0x92F89756082A4514ULL);
}

TEST(Random, StreamsAreReproducibleAndDistinct) {
  auto a = Xoshiro256::for_stream(1, 0);
  auto b = Xoshiro256::for_stream(1, 0);
  auto c = Xoshiro256::for_stream(1, 1);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
}

TEST(Random, BelowStaysInRange) {
  Xoshiro256 rng(42);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) ++hist[rng.below(7)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Bootstrap, ConstantHasZeroSe) {
  const std::vector<double> v(20, 3.5);
  const auto r = bootstrap_mean_se(v);
  EXPECT_EQ(r.mean, 3.5);
  EXPECT_EQ(r.se, 0.0);
  EXPECT_EQ(r.resamples, 500u);
}

TEST(Bootstrap, SingleValue) {
  const std::vector<double> v = {0.7};
  const auto r = bootstrap_mean_se(v);
  EXPECT_DOUBLE_EQ(r.mean, 0.7);
  EXPECT_EQ(r.se, 0.0);
}

TEST(Bootstrap, ExactEnumerationOracle) {
  const std::vector<double> v = {0.0, 1.0};
  const double exact = oracle::exact_bootstrap_se(v);
  EXPECT_NEAR(exact, std::sqrt(0.125), 1e-15);
  BootstrapConfig cfg;
  cfg.resamples = 100000;
  EXPECT_LT(std::abs(bootstrap_mean_se(v, cfg).se - 0.3536), 0.01);
}

TEST(Bootstrap, ThreeValuesAgainstEnumeration) {
  const std::vector<double> v = {0.1, 0.4, 0.9};
  BootstrapConfig cfg;
  cfg.resamples = 200000;
  EXPECT_NEAR(bootstrap_mean_se(v, cfg).se, oracle::exact_bootstrap_se(v), 0.005);
}

TEST(Bootstrap, ThreadCountDoesNotChangeResult) {
  std::vector<double> v;
  for (int i = 0; i < 50; ++i) v.push_back(std::sin(i));
  BootstrapConfig one, four;
  four.threads = 4;
  EXPECT_EQ(resample_means(v, one), resample_means(v, four));
}

TEST(Bootstrap, ResampleDrawsFollowStreams) {
  const std::vector<double> v = {1, 2, 3, 4, 5};
  BootstrapConfig cfg;
  cfg.resamples = 3;
  cfg.seed = 9;
  const auto means = resample_means(v, cfg);
  for (std::size_t r = 0; r < 3; ++r) {
    auto rng = Xoshiro256::for_stream(9, r);
    double sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += v[rng.below(v.size())];
    EXPECT_DOUBLE_EQ(means[r], sum / 5.0);
  }
}

TEST(Bootstrap, EmptyInputThrows) {
  EXPECT_THROW(bootstrap_mean_se(std::vector<double>{}), DataError);
}

TEST(PairedDelta, EqualSeries) {
  const std::vector<double> a = {0.1, 0.5, 0.3};
  const auto d = paired_delta(a, a);
  EXPECT_EQ(d.delta_mean, 0.0);
  EXPECT_EQ(d.se, 0.0);
}

TEST(PairedDelta, ShiftByOne) {
  const std::vector<double> a = {0.1, 0.5, 0.3};
  const std::vector<double> b = {1.1, 1.5, 1.3};
  const auto d = paired_delta(a, b);
  EXPECT_NEAR(d.delta_mean, 1.0, 1e-12);
  EXPECT_NEAR(d.se, 0.0, 1e-12);
  EXPECT_EQ(d.sign_consistency, 1.0);
}

TEST(PairedDelta, MatchesResamplingOracleOnDifferences) {
  std::mt19937 gen(17);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> a(30), b(30), diff(30);
  for (int i = 0; i < 30; ++i) {
    a[i] = u(gen);
    b[i] = u(gen);
    diff[i] = b[i] - a[i];
  }
  BootstrapConfig cfg;
  cfg.resamples = 300;
  const auto d = paired_delta(a, b, cfg);
  double s = 0, s2 = 0;
  std::size_t same_sign = 0;
  double sample = 0;
  for (double x : diff) sample += x;
  sample /= 30;
  for (std::size_t r = 0; r < cfg.resamples; ++r) {
    auto rng = Xoshiro256::for_stream(cfg.seed, r);
    double m = 0;
    for (int i = 0; i < 30; ++i) m += diff[rng.below(30)];
    m /= 30;
    s += m;
    s2 += m * m;
    if ((m > 0) == (sample > 0) && m != 0) ++same_sign;
  }
  const double mean = s / cfg.resamples;
  const double se = std::sqrt((s2 - cfg.resamples * mean * mean) / (cfg.resamples - 1));
  EXPECT_NEAR(d.delta_mean, mean, 1e-12);
  EXPECT_NEAR(d.se, se, 1e-9);
  EXPECT_NEAR(d.sample_delta, sample, 1e-12);
  EXPECT_DOUBLE_EQ(d.sign_consistency, double(same_sign) / cfg.resamples);
}

TEST(PairedDelta, AlignsById) {
  const std::map<std::string, double> a = {{"x", 1}, {"y", 2}};
  const std::map<std::string, double> b = {{"x", 2}, {"y", 3}};
  EXPECT_NEAR(paired_delta(a, b).delta_mean, 1.0, 1e-12);
  const std::map<std::string, double> c = {{"x", 2}, {"z", 3}};
  EXPECT_THROW(paired_delta(a, c), DataError);
}

TEST(Bootstrap, DefaultsAreFixed) {
  EXPECT_EQ(kDefaultBootstrapResamples, 500u);
  EXPECT_EQ(kDefaultBootstrapSeed, 1u);
}

}  // namespace
}  // namespace sumaug
