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

#ifndef SUMAUG_RUNNER_H_
#define SUMAUG_RUNNER_H_

#include <atomic>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "sumaug/backend.h"
#include "sumaug/cache.h"
#include "sumaug/prompt.h"
#include "sumaug/records.h"

namespace sumaug {

// Outcome of one backend interaction (possibly served from the cache).
struct RunRecord {
  std::string id;
  std::string lang;
  std::string stage;
  std::string prompt_hash;
  std::string raw;
  std::string output;  // trimmed completion
  std::string backend;
  std::string timestamp;  // UTC, ISO 8601
  std::string error;
  bool cache_hit = false;

  bool ok() const { return error.empty(); }
};

// Deterministic encoding for output files. Timestamps and cache-hit flags
// vary between runs and are only written when `with_volatile` is set (logs).
std::string to_json_line(const RunRecord& record, bool with_volatile = false);

struct JudgeItem {
  std::string id;
  std::string lang;
  std::string article;
  std::string candidate;
  std::optional<std::string> reference;
};

struct JudgeRecord {
  std::string id;
  std::string lang;
  std::optional<int> score;
  std::string feedback;
  std::string error;
  RunRecord call;
};

std::string to_json_line(const JudgeRecord& record, bool with_volatile = false);

struct RunOptions {
  std::size_t concurrency = 4;  // in-flight examples
  GenerationParams params;
  RetryPolicy retry;
  // Examples started after a stop request are not processed.
  std::stop_token stop;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  // Overrides the language named in summarize / translate-back prompts;
  // otherwise each article's own language is used.
  std::optional<std::string> target_lang;
};

// Runs prompts against one backend with a shared response cache.
class Orchestrator {
 public:
  using RecordSink = std::function<void(const std::vector<RunRecord>&)>;
  using JudgeSink = std::function<void(const JudgeRecord&)>;

  Orchestrator(Backend& backend, ResponseCache& cache, RunOptions options = {});

  // Renders, looks up the cache, otherwise generates and caches.
  RunRecord call(const std::string& id, const std::string& lang, const std::string& stage,
                 const PromptTemplate& tmpl, const Bindings& bindings);

  // One record per example. The sink receives each example's records in
  // corpus order as soon as all earlier examples are done.
  std::vector<RunRecord> run_summarize(const std::vector<ArticleRecord>& corpus, PromptRole role,
                                       const RecordSink& sink = {});

  // translate -> summarize (2 sentences) -> translate back, three records
  // per example. A failed stage ends that example.
  std::vector<RunRecord> run_tst(const std::vector<ArticleRecord>& corpus,
                                 const RecordSink& sink = {});

  // Reference-free unless an item carries a reference and `use_reference`.
  std::vector<JudgeRecord> run_judge(const std::vector<JudgeItem>& items, const JudgeRubric& rubric,
                                     const JudgeParseOptions& parse = {}, bool use_reference = false,
                                     const JudgeSink& sink = {});

  std::size_t backend_calls() const { return backend_calls_.load(); }
  std::size_t cache_hits() const { return cache_hits_.load(); }

 private:
  template <typename Result, typename Work, typename Sink>
  std::vector<Result> for_each_example(std::size_t n, Work&& work, Sink&& sink);

  std::string target_name(const std::string& lang) const;

  Backend& backend_;
  ResponseCache& cache_;
  RunOptions options_;
  std::atomic<std::size_t> backend_calls_{0};
  std::atomic<std::size_t> cache_hits_{0};
};

}  // namespace sumaug

#endif  // SUMAUG_RUNNER_H_
