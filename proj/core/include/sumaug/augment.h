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

#ifndef SUMAUG_AUGMENT_H_
#define SUMAUG_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sumaug/extractive.h"
#include "sumaug/records.h"

namespace sumaug {

enum class AugmentStrategy { kExtractive, kSelftrain, kBacksum };

inline constexpr std::size_t kDefaultSyntheticCap = 6000;
inline constexpr double kDefaultUpsampleAlpha = 0.5;

struct AugmentPlan {
  AugmentStrategy strategy = AugmentStrategy::kExtractive;
  std::size_t cap = kDefaultSyntheticCap;  // synthetic pairs kept per language
  std::uint64_t seed = 1;
};

// Id suffix that marks the construction path of a synthetic pair.
std::string synthetic_id(const std::string& base_id, Provenance provenance);

// <D, S'> with S' the LexRank top-k of D.
TrainPair make_extractive_pair(const ArticleRecord& article, const LexRankConfig& config,
                               const IdfTable* idf = nullptr);
std::vector<TrainPair> build_extractive_pairs(const std::vector<ArticleRecord>& articles,
                                              const LexRankConfig& config = {});

struct SkipRecord {
  std::string id;
  std::string reason;
};

struct BuildResult {
  std::vector<TrainPair> pairs;
  std::vector<SkipRecord> skipped;
};

// <D, S'> where S' is a generated summary keyed by article id.
BuildResult build_selftrain_pairs(const std::vector<ArticleRecord>& articles,
                                  const std::map<std::string, std::string>& generated);

// <D', S'> where S' is an extracted summary and D' a document generated from
// it, keyed by the extracted pair's id.
BuildResult build_backsum_pairs(const std::vector<TrainPair>& extracted,
                                const std::map<std::string, std::string>& generated_docs);

// Reads `id` plus the first present field among `fields` from each line of
// a line-delimited JSON file.
std::map<std::string, std::string> load_generated_texts(const std::filesystem::path& path,
                                                        const std::vector<std::string>& fields,
                                                        std::vector<LineError>* errors = nullptr);

struct MixResult {
  std::vector<TrainPair> pairs;
  std::size_t n_real = 0;
  std::size_t n_synthetic_available = 0;
  std::size_t n_synthetic_kept = 0;
};

// Real pairs plus min(cap, |synthetic|) synthetic pairs chosen uniformly
// without replacement, in seeded shuffled order. All pairs must share one
// language (ConfigError otherwise).
MixResult mix_datasets(std::vector<TrainPair> real, std::vector<TrainPair> synthetic,
                       const AugmentPlan& plan);

struct UpsampleRow {
  std::string lang;
  std::size_t count = 0;
  double probability = 0.0;  // n^alpha / sum n^alpha
  double expected = 0.0;     // total_draws * probability
  std::size_t realized = 0;  // seeded multinomial draw
};

std::vector<double> upsample_probabilities(const std::vector<std::size_t>& counts, double alpha);

std::vector<UpsampleRow> upsample_schedule(const std::map<std::string, std::size_t>& counts,
                                           double alpha, std::size_t total_draws,
                                           std::uint64_t seed);

std::string upsample_csv(const std::vector<UpsampleRow>& rows);

// Flat `key = value` manifest for an external trainer.
class TrainManifest {
 public:
  static TrainManifest training_defaults();
  static TrainManifest inference_defaults();

  // Replaces a value; unknown keys and non-positive numbers throw ConfigError.
  // Returns the previous value.
  std::string set(const std::string& key, const std::string& value);
  const std::string& get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string render() const;

 private:
  std::string kind_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct ManifestOverride {
  std::string key;
  std::string value;
};

// Applies overrides (logging each deviation) and writes the manifest file.
TrainManifest emit_train_manifest(const std::filesystem::path& out,
                                  const std::vector<ManifestOverride>& overrides,
                                  bool inference = false);

}  // namespace sumaug

#endif  // SUMAUG_AUGMENT_H_
