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

#include <csignal>
#include <ctime>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include <pthread.h>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "common.h"
#include "sumaug/cache.h"
#include "sumaug/error.h"
#include "sumaug/langid.h"
#include "sumaug/postprocess.h"
#include "sumaug/runner.h"

namespace sumaug::cli {
namespace {

inline constexpr int kExitInterrupted = 130;

// Turns SIGINT/SIGTERM into a stop request. Signals are blocked in every
// thread started after construction and collected by a watcher thread.
class InterruptGuard {
 public:
  InterruptGuard() {
    sigemptyset(&set_);
    sigaddset(&set_, SIGINT);
    sigaddset(&set_, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &set_, &previous_);
    watcher_ = std::jthread([this](std::stop_token self) {
      const timespec tick{0, 200'000'000};
      while (!self.stop_requested()) {
        const int sig = sigtimedwait(&set_, nullptr, &tick);
        if (sig == SIGINT || sig == SIGTERM) {
          spdlog::warn("signal {} received; finishing in-flight examples", sig);
          source_.request_stop();
          return;
        }
      }
    });
  }
  ~InterruptGuard() {
    watcher_.request_stop();
    watcher_.join();
    pthread_sigmask(SIG_SETMASK, &previous_, nullptr);
  }
  InterruptGuard(const InterruptGuard&) = delete;
  InterruptGuard& operator=(const InterruptGuard&) = delete;

  std::stop_token token() const { return source_.get_token(); }
  bool interrupted() const { return source_.stop_requested(); }

 private:
  sigset_t set_{};
  sigset_t previous_{};
  std::stop_source source_;
  std::jthread watcher_;
};

struct RunFlags {
  std::optional<std::string> backend;
  std::optional<std::string> backend_command;
  std::optional<std::string> model;
  std::optional<std::filesystem::path> cache;
  std::size_t concurrency = 4;
  std::optional<std::size_t> limit;
  std::optional<int> max_tokens;
  std::optional<double> temperature;
  std::optional<std::string> target_lang;
  std::filesystem::path out;

  void add_to(CLI::App& app) {
    auto* named = app.add_option("--backend", backend, "Backend name from the config file");
    auto* command = app.add_option("--backend-command", backend_command,
                                   "Ad hoc command backend: shell command, {MODEL} substituted");
    named->excludes(command);
    app.add_option("--model", model, "Model identity (required with --backend-command)");
    app.add_option("--cache", cache, "Response cache directory (default [paths] cache)");
    app.add_option("--concurrency", concurrency, "Examples in flight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--limit", limit, "Process at most N examples");
    app.add_option("--max-tokens", max_tokens, "Completion token budget (default 256)")
        ->check(CLI::PositiveNumber);
    app.add_option("--temperature", temperature, "Sampling temperature (default 0)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--target-lang", target_lang, "Language named in prompts (default: record lang)");
    app.add_option("--out", out, "Run records")->required();
  }

  BackendSpec backend_spec(const RunConfig& config) const {
    BackendSpec spec;
    if (backend) {
      spec = config.backend(*backend);
      if (model) spec.model = *model;
    } else if (backend_command) {
      if (!model) throw ConfigError("--backend-command needs --model");
      spec.name = "command";
      spec.kind = BackendKind::kCommand;
      spec.command = *backend_command;
      spec.model = *model;
    } else if (config.backends.size() == 1) {
      spec = config.backends.begin()->second;
    } else {
      throw ConfigError("choose a backend with --backend NAME or --backend-command CMD");
    }
    if (max_tokens) spec.params.max_tokens = *max_tokens;
    if (temperature) spec.params.temperature = *temperature;
    return spec;
  }

  std::filesystem::path cache_dir(const RunConfig& config) const {
    if (cache) return *cache;
    if (config.paths.cache) return *config.paths.cache;
    throw ConfigError("needs --cache or [paths] cache");
  }

  RunOptions run_options(const BackendSpec& spec, std::stop_token stop) const {
    RunOptions o;
    o.concurrency = concurrency;
    o.params = spec.params;
    o.retry.max_retries = spec.max_retries;
    o.retry.backoff = spec.backoff;
    o.stop = std::move(stop);
    if (limit) o.limit = *limit;
    o.target_lang = target_lang;
    return o;
  }
};

// Appends records to the output as they are flushed in input order.
class LineSink {
 public:
  explicit LineSink(const std::filesystem::path& path) : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw Error("cannot write " + path.string());
  }
  void write(const std::string& line) {
    std::lock_guard lock(mu_);
    out_ << line << '\n';
    out_.flush();
  }

 private:
  std::mutex mu_;
  std::ofstream out_;
};

int finish_run(const Orchestrator& orch, std::size_t errors, std::size_t done, std::size_t expected,
               const InterruptGuard& guard) {
  spdlog::info("run: {} examples written, {} backend calls, {} cache hits, {} errors", done,
               orch.backend_calls(), orch.cache_hits(), errors);
  if (guard.interrupted() || done < expected) {
    spdlog::warn("run interrupted after {} of {} examples; rerun the same command to resume", done,
                 expected);
    return kExitInterrupted;
  }
  return errors == 0 ? kExitOk : kExitItemErrors;
}

void register_generation(CLI::App& run, Context& ctx, const std::string& name, bool tst) {
  struct Opts {
    RunFlags run;
    std::filesystem::path in;
    std::string role = "summarize_small_chat";
  };
  auto opts = std::make_shared<Opts>();
  auto* sub = run.add_subcommand(
      name, tst ? "Translate to English, summarize in 2 sentences, translate back"
                : "Summarize each article with one prompt");
  sub->add_option("--in", opts->in, "Article records")->required()->check(CLI::ExistingFile);
  if (!tst) {
    sub->add_option("--prompt", opts->role,
                    "summarize_small_mt|summarize_small_chat|summarize_two_sentence")
        ->check(CLI::IsMember({"summarize_small_mt", "summarize_small_chat", "summarize_two_sentence"}))
        ->capture_default_str();
  }
  opts->run.add_to(*sub);
  sub->callback([&ctx, opts, name, tst] {
    ctx.action = [&ctx, opts, name, tst] {
      const BackendSpec spec = opts->run.backend_spec(ctx.config);
      ResponseCache cache(opts->run.cache_dir(ctx.config));
      ctx.log_start("run " + name, std::nullopt);
      ItemErrors errors;
      const auto articles = read_articles(opts->in, errors);
      const auto backend = make_backend(spec);
      InterruptGuard guard;
      Orchestrator orch(*backend, cache, opts->run.run_options(spec, guard.token()));
      LineSink sink(opts->run.out);
      std::size_t failed = 0, done = 0;
      const auto write = [&](const std::vector<RunRecord>& records) {
        ++done;
        for (const auto& r : records) {
          sink.write(to_json_line(r));
          spdlog::debug("{} {} cache_hit={} at {}", r.id, r.stage, r.cache_hit, r.timestamp);
          if (!r.ok()) {
            ++failed;
            spdlog::error("{} ({}): {}", r.id, r.stage, r.error);
          }
        }
      };
      if (tst) {
        orch.run_tst(articles, write);
      } else {
        orch.run_summarize(articles, parse_prompt_role(opts->role), write);
      }
      const std::size_t expected = std::min(articles.size(), opts->run.limit.value_or(articles.size()));
      return std::max(finish_run(orch, failed + errors.count(), done, expected, guard),
                      errors.exit_code());
    };
  });
}

void register_judge(CLI::App& run, Context& ctx) {
  struct Opts {
    RunFlags run;
    std::filesystem::path articles;
    std::filesystem::path candidates;
    std::optional<std::filesystem::path> references;
    std::vector<std::string> fields{"output", "summary", "text"};
    std::string marker = "[RESULT]";
  };
  auto opts = std::make_shared<Opts>();
  auto* sub = run.add_subcommand("judge", "Rubric scores 1-5 from an evaluator model");
  sub->add_option("--articles", opts->articles, "Article records")->required()->check(CLI::ExistingFile);
  sub->add_option("--candidates", opts->candidates, "Candidate summary records")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--references", opts->references, "Reference pairs; switches to the reference-based prompt")
      ->check(CLI::ExistingFile);
  sub->add_option("--field", opts->fields, "Candidate text field(s), in priority order")
      ->capture_default_str();
  sub->add_option("--marker", opts->marker, "Text preceding the score in judge replies")
      ->capture_default_str();
  opts->run.add_to(*sub);
  sub->callback([&ctx, opts] {
    ctx.action = [&ctx, opts] {
      const BackendSpec spec = opts->run.backend_spec(ctx.config);
      ResponseCache cache(opts->run.cache_dir(ctx.config));
      ctx.log_start("run judge", std::nullopt);
      ItemErrors errors;
      std::map<std::string, ArticleRecord> articles;
      for (auto& a : read_articles(opts->articles, errors)) articles.emplace(a.id, std::move(a));
      std::map<std::string, std::string> references;
      if (opts->references) {
        for (const auto& p : read_pairs(*opts->references, errors)) references.emplace(p.id, p.summary_text());
      }
      std::vector<JudgeItem> items;
      for (const auto& c : read_text_records(opts->candidates, opts->fields, errors)) {
        auto it = articles.find(c.id);
        if (it == articles.end()) {
          errors.add(c.id, "no article for this candidate");
          continue;
        }
        JudgeItem item{c.id, it->second.lang, it->second.text, c.text, std::nullopt};
        if (opts->references) {
          auto ref = references.find(c.id);
          if (ref == references.end()) {
            errors.add(c.id, "no reference for this candidate");
            continue;
          }
          item.reference = ref->second;
        }
        items.push_back(std::move(item));
      }
      const auto backend = make_backend(spec);
      InterruptGuard guard;
      Orchestrator orch(*backend, cache, opts->run.run_options(spec, guard.token()));
      LineSink sink(opts->run.out);
      std::size_t failed = 0, done = 0;
      JudgeParseOptions parse;
      parse.marker = opts->marker;
      orch.run_judge(items, JudgeRubric::summary_quality(), parse, opts->references.has_value(),
                     [&](const JudgeRecord& r) {
                       ++done;
                       sink.write(to_json_line(r));
                       if (!r.error.empty()) {
                         ++failed;
                         spdlog::error("{}: {}", r.id, r.error);
                       }
                     });
      const std::size_t expected = std::min(items.size(), opts->run.limit.value_or(items.size()));
      return std::max(finish_run(orch, failed + errors.count(), done, expected, guard),
                      errors.exit_code());
    };
  });
}

}  // namespace

void register_run(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("run", "Cached, resumable LLM runs");
  cmd->require_subcommand(1);
  register_generation(*cmd, ctx, "summarize", false);
  register_generation(*cmd, ctx, "tst", true);
  register_judge(*cmd, ctx);
}

void register_postprocess(CLI::App& app, Context& ctx) {
  struct Opts {
    std::filesystem::path in;
    std::optional<std::string> target_lang;
    std::optional<std::filesystem::path> patterns;
    std::optional<std::filesystem::path> profiles;
    std::optional<std::filesystem::path> report;
    std::vector<std::string> fields{"output", "summary", "text"};
    std::string model = "unknown";
    bool no_fallback = false;
    OutputFlags output;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("postprocess", "Strip and categorize English commentary");
  cmd->add_option("--in", opts->in, "Raw generation records")->required()->check(CLI::ExistingFile);
  cmd->add_option("--target-lang", opts->target_lang, "Target language (default: each record's lang)");
  cmd->add_option("--patterns", opts->patterns, "Pattern file (default [paths] patterns, else built-in)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--profiles", opts->profiles, "Directory of .lpro files (default [paths] profiles)")
      ->check(CLI::ExistingDirectory);
  cmd->add_option("--report", opts->report, "Leakage report per (model, lang) (CSV)");
  cmd->add_option("--field", opts->fields, "Text field(s), in priority order")->capture_default_str();
  cmd->add_option("--model", opts->model, "Model label for records without a backend field")
      ->capture_default_str();
  cmd->add_flag("--no-fallback", opts->no_fallback, "Emit empty text when everything is removed");
  opts->output.add_to(*cmd, "Cleaned records");
  cmd->callback([&ctx, opts] {
    ctx.action = [&ctx, opts] {
      opts->output.require();
      ctx.log_start("postprocess", std::nullopt);
      std::optional<std::filesystem::path> dir = opts->profiles ? opts->profiles : ctx.config.paths.profiles;
      if (!dir) throw ConfigError("postprocess needs --profiles or [paths] profiles");
      const auto id = LanguageIdentifier::from_directory(*dir);
      if (!id.has("eng")) throw ConfigError("postprocess needs an eng profile in " + dir->string());
      std::optional<PatternTable> loaded;
      if (opts->patterns) {
        loaded = PatternTable::load(*opts->patterns);
      } else if (ctx.config.paths.patterns) {
        loaded = PatternTable::load(*ctx.config.paths.patterns);
      }
      const PatternTable& patterns = loaded ? *loaded : PatternTable::defaults();
      ItemErrors errors;
      const auto records = read_text_records(opts->in, opts->fields, errors);
      StripOptions strip;
      strip.fallback_to_raw = !opts->no_fallback;
      std::string out;
      std::vector<LeakageInput> leakage;
      std::size_t empty = 0;
      for (const auto& r : records) {
        const std::string lang = opts->target_lang.value_or(r.lang.empty() ? "und" : r.lang);
        const CleanResult c = strip_english_commentary(r.text, lang, id, patterns, strip);
        if (c.empty) {
          ++empty;
          spdlog::warn("{}: every sentence was removed{}", r.id, c.fell_back ? "; kept raw text" : "");
        }
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["lang"] = lang;
        j["output"] = c.cleaned;
        j["raw"] = r.text;
        j["category"] = std::string(to_string(c.category));
        j["removal_ratio"] = c.removal_ratio;
        j["empty"] = c.empty;
        j["fell_back"] = c.fell_back;
        auto removed = nlohmann::ordered_json::array();
        for (const auto& span : c.removed) {
          removed.push_back({{"text", span.text}, {"category", std::string(to_string(span.category))}});
        }
        j["removed"] = std::move(removed);
        out += j.dump();
        out += '\n';
        leakage.push_back({r.model.empty() ? opts->model : r.model, lang, r.id, r.text});
      }
      spdlog::info("postprocess: {} records, {} emptied", records.size(), empty);
      opts->output.emit(out);
      if (opts->report) {
        write_file_atomic(*opts->report, leakage_csv(leakage_report(leakage, id, patterns)));
      }
      return errors.exit_code();
    };
  });
}

}  // namespace sumaug::cli
