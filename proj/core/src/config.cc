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

#include "sumaug/config.h"

#include <algorithm>
#include <array>
#include <charconv>

#include <fmt/format.h>

#include "sumaug/cache.h"
#include "sumaug/error.h"
#include "sumaug/records.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(fmt::format("`{}`: `{}` is not a valid number", key, value));
  }
  return out;
}

std::size_t parse_count(std::string_view key, std::string_view value) {
  if (!value.empty() && value.front() == '-') {
    throw ConfigError(fmt::format("`{}` must not be negative", key));
  }
  return parse_number<std::size_t>(key, value);
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw ConfigError(fmt::format("`{}`: expected true or false, got `{}`", key, value));
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p.lexically_normal();
}

bool known_section(std::string_view section) {
  static constexpr std::array<std::string_view, 7> kFixed = {
      "paths", "tokenizer", "bootstrap", "seeds", "corpus", "extract", "augment"};
  if (section.starts_with("backend.")) return section.size() > 8;
  return std::find(kFixed.begin(), kFixed.end(), section) != kFixed.end();
}

std::string unknown_key(std::string_view section, std::string_view key) {
  return fmt::format("unknown key `{}` in [{}]", key, section);
}

void set_backend(BackendSpec& b, std::string_view key, std::string_view value) {
  if (key == "kind") {
    if (value == "command") {
      b.kind = BackendKind::kCommand;
    } else if (value == "http") {
      b.kind = BackendKind::kHttp;
    } else {
      throw ConfigError(fmt::format("backend kind must be command or http, got `{}`", value));
    }
  } else if (key == "model") {
    b.model = std::string(value);
  } else if (key == "endpoint") {
    b.endpoint = std::string(value);
  } else if (key == "command") {
    b.command = std::string(value);
  } else if (key == "max_tokens") {
    b.params.max_tokens = parse_number<int>(key, value);
    if (b.params.max_tokens <= 0) throw ConfigError("`max_tokens` must be positive");
  } else if (key == "temperature") {
    b.params.temperature = parse_number<double>(key, value);
    if (b.params.temperature < 0.0) throw ConfigError("`temperature` must not be negative");
  } else if (key == "stop") {
    b.params.stop.emplace_back(value);
  } else if (key == "timeout_ms") {
    b.timeout = std::chrono::milliseconds(parse_count(key, value));
  } else if (key == "max_retries") {
    b.max_retries = parse_number<int>(key, value);
    if (b.max_retries < 0) throw ConfigError("`max_retries` must not be negative");
  } else if (key == "backoff_ms") {
    b.backoff = std::chrono::milliseconds(parse_count(key, value));
  } else {
    throw ConfigError(unknown_key("backend." + b.name, key));
  }
}

std::string kind_name(BackendKind k) { return k == BackendKind::kHttp ? "http" : "command"; }

}  // namespace

void RunConfig::set(std::string_view section, std::string_view key, std::string_view value,
                    const std::filesystem::path& base_dir) {
  if (section == "paths") {
    std::optional<std::filesystem::path>* slot = nullptr;
    if (key == "corpus") slot = &paths.corpus;
    else if (key == "cache") slot = &paths.cache;
    else if (key == "outputs") slot = &paths.outputs;
    else if (key == "profiles") slot = &paths.profiles;
    else if (key == "patterns") slot = &paths.patterns;
    else throw ConfigError(unknown_key(section, key));
    *slot = resolve(base_dir, value);
  } else if (section.starts_with("backend.")) {
    const std::string name(section.substr(8));
    if (name.empty()) throw ConfigError("backend section needs a name: [backend.NAME]");
    auto [it, inserted] = backends.try_emplace(name);
    if (inserted) it->second.name = name;
    set_backend(it->second, key, value);
  } else if (section == "tokenizer") {
    if (key == "kind") tokenizer.kind = parse_tokenizer_kind(value);
    else if (key == "vocab") tokenizer.vocab_path = resolve(base_dir, value);
    else if (key == "lowercase") tokenizer.lowercase = parse_bool(key, value);
    else if (key == "unspaced_fallback") tokenizer.unspaced_fallback = parse_bool(key, value);
    else throw ConfigError(unknown_key(section, key));
    extract.tokenizer = tokenizer;
  } else if (section == "bootstrap") {
    if (key == "resamples") bootstrap.resamples = parse_count(key, value);
    else if (key == "seed") bootstrap.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "threads") bootstrap.threads = parse_count(key, value);
    else throw ConfigError(unknown_key(section, key));
    if (bootstrap.resamples < 2) throw ConfigError("`resamples` must be at least 2");
    if (bootstrap.threads == 0) throw ConfigError("`threads` must be at least 1");
  } else if (section == "seeds") {
    if (key == "mix") seeds.mix = parse_number<std::uint64_t>(key, value);
    else if (key == "upsample") seeds.upsample = parse_number<std::uint64_t>(key, value);
    else throw ConfigError(unknown_key(section, key));
  } else if (section == "corpus") {
    if (key == "min_sentences") min_sentences = parse_count(key, value);
    else throw ConfigError(unknown_key(section, key));
  } else if (section == "extract") {
    if (key == "k") extract.k = parse_count(key, value);
    else if (key == "mode") extract.mode = parse_graph_mode(value);
    else if (key == "threshold") extract.threshold = parse_number<double>(key, value);
    else throw ConfigError(unknown_key(section, key));
    if (extract.k == 0) throw ConfigError("`k` must be at least 1");
    if (!(extract.threshold >= 0.0 && extract.threshold < 1.0)) {
      throw ConfigError("`threshold` must be in [0, 1)");
    }
  } else if (section == "augment") {
    if (key == "cap") augment_cap = parse_count(key, value);
    else if (key == "alpha") upsample_alpha = parse_number<double>(key, value);
    else throw ConfigError(unknown_key(section, key));
    if (!(upsample_alpha >= 0.0 && upsample_alpha <= 1.0)) {
      throw ConfigError("`alpha` must be in [0, 1]");
    }
  } else {
    throw ConfigError(fmt::format("unknown section [{}]", section));
  }
}

void RunConfig::set(std::string_view dotted_key, std::string_view value,
                    const std::filesystem::path& base_dir) {
  const std::size_t dot = dotted_key.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == dotted_key.size()) {
    throw ConfigError(fmt::format("override `{}` must look like section.key", dotted_key));
  }
  set(dotted_key.substr(0, dot), dotted_key.substr(dot + 1), value, base_dir);
}

RunConfig RunConfig::parse(std::string_view text, const std::filesystem::path& base_dir,
                           std::string_view source) {
  RunConfig config;
  std::string section;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = unicode::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    try {
      if (line.front() == '[') {
        if (line.back() != ']') throw ConfigError("unterminated section header");
        section = std::string(unicode::trim(line.substr(1, line.size() - 2)));
        if (!known_section(section)) throw ConfigError(fmt::format("unknown section [{}]", section));
        continue;
      }
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw ConfigError("expected `key = value`");
      if (section.empty()) throw ConfigError("key outside of any section");
      config.set(section, unicode::trim(line.substr(0, eq)), unicode::trim(line.substr(eq + 1)),
                 base_dir);
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("{}:{}: {}", source, line_no, e.what()));
    }
  }
  return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.parent_path(), path.string());
}

void RunConfig::validate() const {
  const auto require = [](const std::optional<std::filesystem::path>& p, std::string_view what) {
    if (p && !std::filesystem::exists(*p)) {
      throw ConfigError(fmt::format("{} path `{}` does not exist", what, p->string()));
    }
  };
  require(paths.corpus, "corpus");
  require(paths.profiles, "profiles");
  require(paths.patterns, "patterns");
  if (tokenizer.kind == TokenizerKind::kExternalVocab) {
    if (!tokenizer.vocab_path) throw ConfigError("external_vocab tokenizer needs `vocab`");
    require(tokenizer.vocab_path, "vocab");
  }
  for (const auto& [name, b] : backends) {
    if (b.model.empty()) throw ConfigError(fmt::format("backend `{}` has no model", name));
    if (b.kind == BackendKind::kCommand && b.command.empty()) {
      throw ConfigError(fmt::format("backend `{}` has no command", name));
    }
    if (b.kind == BackendKind::kHttp && b.endpoint.empty()) {
      throw ConfigError(fmt::format("backend `{}` has no endpoint", name));
    }
  }
}

const BackendSpec& RunConfig::backend(std::string_view name) const {
  auto it = backends.find(std::string(name));
  if (it == backends.end()) throw ConfigError(fmt::format("no backend named `{}`", name));
  return it->second;
}

std::string RunConfig::render() const {
  std::string out;
  const auto path_line = [&](std::string_view key, const std::optional<std::filesystem::path>& p) {
    if (p) out += fmt::format("{} = {}\n", key, p->string());
  };
  out += "[paths]\n";
  path_line("corpus", paths.corpus);
  path_line("cache", paths.cache);
  path_line("outputs", paths.outputs);
  path_line("profiles", paths.profiles);
  path_line("patterns", paths.patterns);
  for (const auto& [name, b] : backends) {
    out += fmt::format("\n[backend.{}]\nkind = {}\nmodel = {}\n", name, kind_name(b.kind), b.model);
    if (!b.endpoint.empty()) out += fmt::format("endpoint = {}\n", b.endpoint);
    if (!b.command.empty()) out += fmt::format("command = {}\n", b.command);
    out += fmt::format("max_tokens = {}\ntemperature = {}\n", b.params.max_tokens, b.params.temperature);
    for (const auto& s : b.params.stop) out += fmt::format("stop = {}\n", s);
    out += fmt::format("timeout_ms = {}\nmax_retries = {}\nbackoff_ms = {}\n", b.timeout.count(),
                       b.max_retries, b.backoff.count());
  }
  out += fmt::format("\n[tokenizer]\nkind = {}\n", to_string(tokenizer.kind));
  path_line("vocab", tokenizer.vocab_path);
  out += fmt::format("lowercase = {}\nunspaced_fallback = {}\n", tokenizer.lowercase,
                     tokenizer.unspaced_fallback);
  out += fmt::format("\n[bootstrap]\nresamples = {}\nseed = {}\nthreads = {}\n", bootstrap.resamples,
                     bootstrap.seed, bootstrap.threads);
  out += fmt::format("\n[seeds]\nmix = {}\nupsample = {}\n", seeds.mix, seeds.upsample);
  out += fmt::format("\n[corpus]\nmin_sentences = {}\n", min_sentences);
  out += fmt::format("\n[extract]\nk = {}\nmode = {}\nthreshold = {}\n", extract.k,
                     to_string(extract.mode), extract.threshold);
  out += fmt::format("\n[augment]\ncap = {}\nalpha = {}\n", augment_cap, upsample_alpha);
  return out;
}

std::string RunConfig::hash() const { return sha256_hex(render()); }

}  // namespace sumaug
