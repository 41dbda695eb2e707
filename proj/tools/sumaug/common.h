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

#ifndef SUMAUG_TOOLS_COMMON_H_
#define SUMAUG_TOOLS_COMMON_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sumaug/config.h"
#include "sumaug/records.h"
#include "sumaug/tokenize.h"

namespace sumaug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitItemErrors = 1;
inline constexpr int kExitUsage = 2;

// State shared by every subcommand. Options are parsed first; the config
// file is loaded afterwards, so subcommand options that fall back to config
// values are std::optional.
struct Context {
  std::optional<std::filesystem::path> config_path;
  std::vector<std::string> overrides;
  std::string log_level = "info";

  RunConfig config;
  std::function<int()> action;

  void load_config();
  // One structured line per run: version, dependencies, config hash, seed.
  void log_start(std::string_view command, std::optional<std::uint64_t> seed) const;
};

// `--tokenizer` / `--vocab` / `--lowercase`, falling back to [tokenizer].
struct TokenizerFlags {
  std::optional<std::string> kind;
  std::optional<std::filesystem::path> vocab;
  bool lowercase = false;

  void add_to(CLI::App& app);
  TokenizerSpec resolve(const RunConfig& config) const;
};

// `--out FILE` or `--stdout`, never both.
struct OutputFlags {
  std::optional<std::filesystem::path> out;
  bool to_stdout = false;

  void add_to(CLI::App& app, std::string_view what = "Output file");
  void require() const;
  // Writes `content` atomically to --out, or to standard output.
  void emit(std::string_view content) const;
};

// Counts per-line problems and logs them; the count decides exit status 1.
class ItemErrors {
 public:
  void add(std::string_view where, std::string_view message);
  void add(std::string_view file, const std::vector<LineError>& errors);
  std::size_t count() const { return count_; }
  int exit_code() const { return count_ == 0 ? kExitOk : kExitItemErrors; }

 private:
  std::size_t count_ = 0;
};

std::vector<ArticleRecord> read_articles(const std::filesystem::path& path, ItemErrors& errors);
std::vector<TrainPair> read_pairs(const std::filesystem::path& path, ItemErrors& errors);
// Any line-delimited record with `id`, optional `lang` and the first present
// text field among `fields` (arrays of sentences are joined with spaces).
struct TextRecord {
  std::string id;
  std::string lang;
  std::string text;
  std::string model;  // `backend` field of run records, when present
};
std::vector<TextRecord> read_text_records(const std::filesystem::path& path,
                                          const std::vector<std::string>& fields,
                                          ItemErrors& errors);

std::string render_records(const std::vector<TrainPair>& pairs);
std::string render_records(const std::vector<ArticleRecord>& articles);

// Subcommand registration; each sets ctx.action from its callback.
void register_corpus(CLI::App& app, Context& ctx);
void register_extract(CLI::App& app, Context& ctx);
void register_augment(CLI::App& app, Context& ctx);
void register_manifest(CLI::App& app, Context& ctx);
void register_score(CLI::App& app, Context& ctx);
void register_bootstrap(CLI::App& app, Context& ctx);
void register_report(CLI::App& app, Context& ctx);
void register_langid(CLI::App& app, Context& ctx);
void register_run(CLI::App& app, Context& ctx);
void register_postprocess(CLI::App& app, Context& ctx);

}  // namespace sumaug::cli

#endif  // SUMAUG_TOOLS_COMMON_H_
