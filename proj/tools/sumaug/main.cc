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

// sumaug: command-line entry point for every pipeline stage.

#include <algorithm>
#include <array>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "common.h"
#include "sumaug/error.h"
#include "sumaug/version.h"

namespace {

// Global options that consume the following argument.
constexpr std::array<std::string_view, 3> kValueOptions = {"--config", "--set", "--log-level"};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

struct UnknownSubcommand {
  std::string name;
  std::vector<std::string> choices;
};

std::vector<std::string> subcommand_names(const CLI::App& app) {
  std::vector<std::string> out;
  for (const CLI::App* sub : app.get_subcommands({})) out.push_back(sub->get_name());
  return out;
}

// The first positional argument must name a subcommand, and so must the one
// right after a command group such as `run`; CLI11 would only report them as
// unexpected extras.
std::optional<UnknownSubcommand> unknown_subcommand(const CLI::App& app, int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--") return std::nullopt;
    if (arg.starts_with("-")) {
      if (std::find(kValueOptions.begin(), kValueOptions.end(), arg) != kValueOptions.end()) ++i;
      continue;
    }
    const auto top = subcommand_names(app);
    if (std::find(top.begin(), top.end(), arg) == top.end()) return UnknownSubcommand{std::string(arg), top};
    const CLI::App* group = app.get_subcommand(std::string(arg));
    const auto nested = subcommand_names(*group);
    if (nested.empty() || i + 1 >= argc || std::string_view(argv[i + 1]).starts_with("-")) {
      return std::nullopt;
    }
    const std::string next = argv[i + 1];
    if (std::find(nested.begin(), nested.end(), next) != nested.end()) return std::nullopt;
    return UnknownSubcommand{next, nested};
  }
  return std::nullopt;
}

void setup_logging(const std::string& level) {
  auto logger = spdlog::stderr_logger_mt("sumaug");
  logger->set_pattern("[%Y-%m-%dT%H:%M:%S.%e] [%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sumaug::cli;

  Context ctx;
  CLI::App app{"sumaug: data augmentation, extraction, LLM runs and evaluation for summarization "
               "in less-resourced languages",
               "sumaug"};
  app.set_version_flag("--version", std::string(sumaug::version()));
  app.add_option("--config", ctx.config_path, "Configuration file (INI sections)");
  app.add_option("--set", ctx.overrides, "Override a config value: section.key=value (repeatable)");
  app.add_option("--log-level", ctx.log_level, "trace|debug|info|warn|error|off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}))
      ->capture_default_str();
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();

  register_corpus(app, ctx);
  register_extract(app, ctx);
  register_augment(app, ctx);
  register_score(app, ctx);
  register_bootstrap(app, ctx);
  register_langid(app, ctx);
  register_run(app, ctx);
  register_postprocess(app, ctx);
  register_manifest(app, ctx);
  register_report(app, ctx);

  if (auto bad = unknown_subcommand(app, argc, argv)) {
    const auto best = std::min_element(bad->choices.begin(), bad->choices.end(),
                                       [&](std::string_view a, std::string_view b) {
                                         return edit_distance(bad->name, a) < edit_distance(bad->name, b);
                                       });
    std::cerr << "sumaug: unknown subcommand `" << bad->name << "`";
    if (best != bad->choices.end() &&
        edit_distance(bad->name, *best) <= std::max<std::size_t>(2, bad->name.size() / 3)) {
      std::cerr << "; did you mean `" << *best << "`?";
    }
    std::cerr << "\nRun `sumaug --help` for the list of subcommands.\n";
    return kExitUsage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  setup_logging(ctx.log_level);
  try {
    ctx.load_config();
    if (!ctx.action) {
      std::cerr << app.help();
      return kExitUsage;
    }
    return ctx.action();
  } catch (const sumaug::ConfigError& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitItemErrors;
  }
}
