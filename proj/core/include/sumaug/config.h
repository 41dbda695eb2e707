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

#ifndef SUMAUG_CONFIG_H_
#define SUMAUG_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "sumaug/augment.h"
#include "sumaug/backend.h"
#include "sumaug/bootstrap.h"
#include "sumaug/corpus.h"
#include "sumaug/extractive.h"
#include "sumaug/tokenize.h"

namespace sumaug {

struct PathsConfig {
  std::optional<std::filesystem::path> corpus;
  std::optional<std::filesystem::path> cache;
  std::optional<std::filesystem::path> outputs;
  std::optional<std::filesystem::path> profiles;
  std::optional<std::filesystem::path> patterns;
};

struct SeedsConfig {
  std::uint64_t mix = 1;
  std::uint64_t upsample = 1;
};

// Shared settings for every subcommand. File form is INI-like:
//
//   [paths]            corpus, cache, outputs, profiles, patterns
//   [backend.NAME]     kind, model, endpoint, command, max_tokens,
//                      temperature, stop (repeatable), timeout_ms,
//                      max_retries, backoff_ms
//   [tokenizer]        kind, vocab, lowercase, unspaced_fallback
//   [bootstrap]        resamples, seed, threads
//   [seeds]            mix, upsample
//   [corpus]           min_sentences
//   [extract]          k, mode, threshold
//   [augment]          cap, alpha
//
// Unknown sections and keys are errors. Relative paths resolve against the
// directory of the file they came from.
struct RunConfig {
  PathsConfig paths;
  std::map<std::string, BackendSpec> backends;
  TokenizerSpec tokenizer;
  BootstrapConfig bootstrap;
  SeedsConfig seeds;
  std::size_t min_sentences = kDefaultMinSentences;
  LexRankConfig extract;
  std::size_t augment_cap = kDefaultSyntheticCap;
  double upsample_alpha = kDefaultUpsampleAlpha;

  static RunConfig parse(std::string_view text, const std::filesystem::path& base_dir = {},
                         std::string_view source = "<config>");
  static RunConfig load(const std::filesystem::path& path);

  // Applies one `section.key=value` override (backend sections as
  // `backend.NAME.key=value`).
  void set(std::string_view dotted_key, std::string_view value,
           const std::filesystem::path& base_dir = {});
  void set(std::string_view section, std::string_view key, std::string_view value,
           const std::filesystem::path& base_dir = {});

  // Throws ConfigError for input paths that do not exist and for an
  // external_vocab tokenizer without a vocabulary.
  void validate() const;

  const BackendSpec& backend(std::string_view name) const;

  // Canonical rendering; parse(render()) reproduces the configuration.
  std::string render() const;
  // SHA-256 of render().
  std::string hash() const;
};

}  // namespace sumaug

#endif  // SUMAUG_CONFIG_H_
