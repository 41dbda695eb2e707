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

#include "common.h"

#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include <fmt/ranges.h>
#include <spdlog/spdlog.h>

#include "sumaug/error.h"
#include "sumaug/version.h"

namespace sumaug::cli {

void Context::load_config() {
  if (config_path) {
    if (!std::filesystem::exists(*config_path)) {
      throw ConfigError("config file `" + config_path->string() + "` does not exist");
    }
    config = RunConfig::load(*config_path);
  }
  for (const auto& o : overrides) {
    const std::size_t eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects section.key=value, got `" + o + "`");
    config.set(o.substr(0, eq), o.substr(eq + 1));
  }
  config.validate();
}

void Context::log_start(std::string_view command, std::optional<std::uint64_t> seed) const {
  spdlog::info("sumaug {} command={} config_hash={} seed={} deps=[{}]", version(), command,
               config.hash().substr(0, 16), seed ? std::to_string(*seed) : std::string("none"),
               dependency_versions());
}

void TokenizerFlags::add_to(CLI::App& app) {
  app.add_option("--tokenizer", kind, "unicode_word|whitespace|character|external_vocab")
      ->check(CLI::IsMember({"unicode_word", "whitespace", "character", "external_vocab"}));
  app.add_option("--vocab", vocab, "Vocabulary file for external_vocab")->check(CLI::ExistingFile);
  app.add_flag("--lowercase", lowercase, "Case-fold before tokenizing");
}

TokenizerSpec TokenizerFlags::resolve(const RunConfig& config) const {
  TokenizerSpec spec = config.tokenizer;
  if (kind) spec.kind = parse_tokenizer_kind(*kind);
  if (vocab) spec.vocab_path = *vocab;
  if (lowercase) spec.lowercase = true;
  if (spec.kind == TokenizerKind::kExternalVocab && !spec.vocab_path) {
    throw ConfigError("--tokenizer external_vocab needs --vocab");
  }
  return spec;
}

void OutputFlags::add_to(CLI::App& app, std::string_view what) {
  auto* out_opt = app.add_option("--out", out, std::string(what));
  auto* stdout_opt = app.add_flag("--stdout", to_stdout, "Stream the output to standard output");
  out_opt->excludes(stdout_opt);
}

void OutputFlags::require() const {
  if (!out && !to_stdout) throw ConfigError("one of --out or --stdout is required");
}

void OutputFlags::emit(std::string_view content) const {
  if (to_stdout) {
    std::cout << content;
    std::cout.flush();
  } else if (out) {
    write_file_atomic(*out, content);
    spdlog::info("wrote {}", out->string());
  }
}

void ItemErrors::add(std::string_view where, std::string_view message) {
  ++count_;
  spdlog::error("{}: {}", where, message);
}

void ItemErrors::add(std::string_view file, const std::vector<LineError>& errors) {
  for (const auto& e : errors) add(fmt::format("{}:{}", file, e.line), e.message);
}

std::vector<ArticleRecord> read_articles(const std::filesystem::path& path, ItemErrors& errors) {
  std::vector<LineError> line_errors;
  auto out = load_articles(path, &line_errors);
  errors.add(path.string(), line_errors);
  return out;
}

std::vector<TrainPair> read_pairs(const std::filesystem::path& path, ItemErrors& errors) {
  std::vector<LineError> line_errors;
  auto out = load_pairs(path, &line_errors);
  errors.add(path.string(), line_errors);
  return out;
}

std::vector<TextRecord> read_text_records(const std::filesystem::path& path,
                                          const std::vector<std::string>& fields,
                                          ItemErrors& errors) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<TextRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      TextRecord r;
      r.id = j.at("id").get<std::string>();
      if (auto it = j.find("lang"); it != j.end()) r.lang = it->get<std::string>();
      if (auto it = j.find("backend"); it != j.end()) r.model = it->get<std::string>();
      bool found = false;
      for (const auto& f : fields) {
        auto it = j.find(f);
        if (it == j.end()) continue;
        if (it->is_string()) {
          r.text = it->get<std::string>();
        } else if (it->is_array()) {
          for (const auto& s : *it) {
            if (!r.text.empty()) r.text += ' ';
            r.text += s.get<std::string>();
          }
        } else {
          continue;
        }
        found = true;
        break;
      }
      if (!found) throw DataError(fmt::format("none of the fields [{}] present", fmt::join(fields, ", ")));
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      errors.add(fmt::format("{}:{}", path.string(), line_no), e.what());
    }
  }
  return out;
}

std::string render_records(const std::vector<TrainPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    out += to_json_line(p);
    out += '\n';
  }
  return out;
}

std::string render_records(const std::vector<ArticleRecord>& articles) {
  std::string out;
  for (const auto& a : articles) {
    out += to_json_line(a);
    out += '\n';
  }
  return out;
}

}  // namespace sumaug::cli
