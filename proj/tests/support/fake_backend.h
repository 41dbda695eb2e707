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

// In-process backends for orchestration tests.
#ifndef SUMAUG_TESTS_FAKE_BACKEND_H_
#define SUMAUG_TESTS_FAKE_BACKEND_H_

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "sumaug/backend.h"

namespace sumaug::fake {

// Echoes the prompt and records every call in order. `on_call` runs after
// each call with the number of calls so far.
class CountingEcho final : public Backend {
 public:
  explicit CountingEcho(std::string identity = "echo") : identity_(std::move(identity)) {}

  const std::string& identity() const override { return identity_; }

  std::string complete(const std::string& prompt, const GenerationParams&) override {
    std::size_t n;
    {
      std::lock_guard lock(mu_);
      prompts_.push_back(prompt);
      n = prompts_.size();
    }
    if (fail_if_ && fail_if_(prompt)) throw BackendError("scripted failure");
    if (on_call) on_call(n);
    return reply_ ? reply_(prompt) : prompt;
  }

  std::vector<std::string> prompts() const {
    std::lock_guard lock(mu_);
    return prompts_;
  }
  std::size_t calls() const {
    std::lock_guard lock(mu_);
    return prompts_.size();
  }
  void reset() {
    std::lock_guard lock(mu_);
    prompts_.clear();
  }

  std::function<void(std::size_t)> on_call;
  void fail_if(std::function<bool(const std::string&)> f) { fail_if_ = std::move(f); }
  void reply(std::function<std::string(const std::string&)> f) { reply_ = std::move(f); }

 private:
  std::string identity_;
  mutable std::mutex mu_;
  std::vector<std::string> prompts_;
  std::function<bool(const std::string&)> fail_if_;
  std::function<std::string(const std::string&)> reply_;
};

}  // namespace sumaug::fake

#endif  // SUMAUG_TESTS_FAKE_BACKEND_H_
