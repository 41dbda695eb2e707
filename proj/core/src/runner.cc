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

#include "sumaug/runner.h"

#include <chrono>
#include <ctime>
#include <map>
#include <mutex>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "sumaug/languages.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

using json = nlohmann::ordered_json;

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json record_json(const RunRecord& r, bool with_volatile) {
  json j;
  j["id"] = r.id;
  j["lang"] = r.lang;
  j["stage"] = r.stage;
  j["backend"] = r.backend;
  j["prompt_hash"] = r.prompt_hash;
  j["raw"] = r.raw;
  j["output"] = r.output;
  if (!r.error.empty()) j["error"] = r.error;
  if (with_volatile) {
    j["cache_hit"] = r.cache_hit;
    j["timestamp"] = r.timestamp;
  }
  return j;
}

}  // namespace

std::string to_json_line(const RunRecord& record, bool with_volatile) {
  return record_json(record, with_volatile).dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string to_json_line(const JudgeRecord& record, bool with_volatile) {
  json j;
  j["id"] = record.id;
  j["lang"] = record.lang;
  j["stage"] = "judge";
  j["backend"] = record.call.backend;
  j["prompt_hash"] = record.call.prompt_hash;
  if (record.score) {
    j["score"] = *record.score;
  } else {
    j["score"] = nullptr;
  }
  j["feedback"] = record.feedback;
  j["raw"] = record.call.raw;
  if (!record.error.empty()) j["error"] = record.error;
  if (with_volatile) {
    j["cache_hit"] = record.call.cache_hit;
    j["timestamp"] = record.call.timestamp;
  }
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

Orchestrator::Orchestrator(Backend& backend, ResponseCache& cache, RunOptions options)
    : backend_(backend), cache_(cache), options_(std::move(options)) {
  if (options_.concurrency == 0) options_.concurrency = 1;
}

std::string Orchestrator::target_name(const std::string& lang) const {
  return language_name(options_.target_lang.value_or(lang));
}

RunRecord Orchestrator::call(const std::string& id, const std::string& lang,
                             const std::string& stage, const PromptTemplate& tmpl,
                             const Bindings& bindings) {
  RunRecord r;
  r.id = id;
  r.lang = lang;
  r.stage = stage;
  r.backend = backend_.identity();
  r.timestamp = utc_now();
  std::string prompt;
  try {
    prompt = render_prompt(tmpl, bindings);
  } catch (const std::exception& e) {
    r.error = e.what();
    return r;
  }
  // Only bound placeholders take part in the key.
  Bindings used;
  for (const auto& name : placeholders(tmpl.body)) used[name] = bindings.at(name);
  r.prompt_hash = prompt_hash(tmpl.id, used, options_.params, backend_.identity());

  if (auto hit = cache_.get(r.prompt_hash)) {
    ++cache_hits_;
    r.cache_hit = true;
    r.raw = std::move(*hit);
  } else {
    RetryPolicy retry = options_.retry;
    Generation g;
    {
      // Count attempts, not just calls, so retries are visible.
      struct Counting final : Backend {
        Backend& inner;
        std::atomic<std::size_t>& calls;
        Counting(Backend& b, std::atomic<std::size_t>& c) : inner(b), calls(c) {}
        const std::string& identity() const override { return inner.identity(); }
        std::string complete(const std::string& p, const GenerationParams& gp) override {
          ++calls;
          return inner.complete(p, gp);
        }
      } counting(backend_, backend_calls_);
      g = generate(counting, prompt, options_.params, retry);
    }
    if (!g.ok) {
      r.error = fmt::format("backend failed after {} attempt(s): {}", g.attempts, g.error);
      return r;
    }
    r.raw = std::move(g.text);
    cache_.put(r.prompt_hash, r.raw);
  }
  r.output = std::string(unicode::trim(r.raw));
  return r;
}

template <typename Result, typename Work, typename Sink>
std::vector<Result> Orchestrator::for_each_example(std::size_t n, Work&& work, Sink&& sink) {
  n = std::min(n, options_.limit);
  std::vector<std::optional<Result>> slots(n);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t flushed = 0;

  auto worker = [&] {
    for (;;) {
      if (options_.stop.stop_requested()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      Result result = work(i);
      std::lock_guard lock(mu);
      slots[i] = std::move(result);
      while (flushed < n && slots[flushed]) {
        sink(*slots[flushed]);
        ++flushed;
      }
    }
  };
  const std::size_t threads = std::min(options_.concurrency, std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<Result> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<RunRecord> Orchestrator::run_summarize(const std::vector<ArticleRecord>& corpus,
                                                   PromptRole role, const RecordSink& sink) {
  const PromptTemplate& tmpl = builtin_template(role);
  const std::string stage = std::string(to_string(role));
  auto results = for_each_example<RunRecord>(
      corpus.size(),
      [&](std::size_t i) {
        const ArticleRecord& a = corpus[i];
        Bindings b{{"LANGUAGE", target_name(a.lang)}, {"ARTICLE_TEXT", a.text}};
        return call(a.id, a.lang, stage, tmpl, b);
      },
      [&](const RunRecord& r) {
        if (sink) sink({r});
      });
  return results;
}

std::vector<RunRecord> Orchestrator::run_tst(const std::vector<ArticleRecord>& corpus,
                                             const RecordSink& sink) {
  const PromptTemplate& translate = builtin_template(PromptRole::kTranslate);
  const PromptTemplate& summarize = builtin_template(PromptRole::kSummarizeTwoSentence);
  auto per_example = for_each_example<std::vector<RunRecord>>(
      corpus.size(),
      [&](std::size_t i) {
        const ArticleRecord& a = corpus[i];
        std::vector<RunRecord> recs;
        recs.push_back(call(a.id, a.lang, "tst.translate", translate,
                            {{"LANG", "English"}, {"ARTICLE_TEXT", a.text}}));
        if (!recs.back().ok()) return recs;
        recs.push_back(call(a.id, a.lang, "tst.summarize", summarize,
                            {{"ARTICLE_TEXT", recs.back().output}}));
        if (!recs.back().ok()) return recs;
        recs.push_back(call(a.id, a.lang, "tst.translate_back", translate,
                            {{"LANG", target_name(a.lang)}, {"ARTICLE_TEXT", recs.back().output}}));
        return recs;
      },
      [&](const std::vector<RunRecord>& recs) {
        if (sink) sink(recs);
      });
  std::vector<RunRecord> out;
  for (auto& recs : per_example) {
    for (auto& r : recs) out.push_back(std::move(r));
  }
  return out;
}

std::vector<JudgeRecord> Orchestrator::run_judge(const std::vector<JudgeItem>& items,
                                                 const JudgeRubric& rubric,
                                                 const JudgeParseOptions& parse, bool use_reference,
                                                 const JudgeSink& sink) {
  const PromptTemplate& instruction_tmpl = builtin_template(PromptRole::kSummarizeTwoSentence);
  // Validates that all five descriptions are present before any call.
  (void)judge_bindings(rubric, "", "");
  return for_each_example<JudgeRecord>(
      items.size(),
      [&](std::size_t i) {
        const JudgeItem& item = items[i];
        const std::string instruction =
            render_prompt(instruction_tmpl, {{"ARTICLE_TEXT", item.article}});
        Bindings b = judge_bindings(rubric, instruction, item.candidate);
        const bool with_ref = use_reference && item.reference.has_value();
        if (with_ref) b["REFERENCE"] = *item.reference;
        const PromptTemplate& tmpl =
            with_ref ? judge_with_reference_template() : builtin_template(PromptRole::kJudge);
        JudgeRecord jr;
        jr.id = item.id;
        jr.lang = item.lang;
        jr.call = call(item.id, item.lang, "judge", tmpl, b);
        if (!jr.call.ok()) {
          jr.error = jr.call.error;
          return jr;
        }
        JudgeParse p = parse_judge_response(jr.call.raw, parse);
        jr.score = p.score;
        jr.feedback = std::move(p.feedback);
        jr.error = std::move(p.error);
        return jr;
      },
      [&](const JudgeRecord& r) {
        if (sink) sink(r);
      });
}

}  // namespace sumaug
