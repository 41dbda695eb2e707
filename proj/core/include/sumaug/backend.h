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

#ifndef SUMAUG_BACKEND_H_
#define SUMAUG_BACKEND_H_

#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include "sumaug/error.h"

namespace sumaug {

struct GenerationParams {
  int max_tokens = 256;
  double temperature = 0.0;
  std::vector<std::string> stop;
};

enum class BackendKind { kCommand, kHttp };

// How to reach one text-generation model.
//
// command: `command` runs under /bin/sh with `{MODEL}` replaced by `model`;
//   the prompt arrives on stdin and the completion is read from stdout.
//   Generation parameters are exported as SUMAUG_MAX_TOKENS,
//   SUMAUG_TEMPERATURE and SUMAUG_STOP (newline separated).
// http: one POST of {"model","prompt","max_tokens","temperature","stop"} to
//   `endpoint`, answered by {"text": ...}.
struct BackendSpec {
  std::string name;
  BackendKind kind = BackendKind::kCommand;
  std::string model;  // identity; part of every cache key
  GenerationParams params;
  std::string endpoint;
  std::string command;
  std::chrono::milliseconds timeout{120'000};
  int max_retries = 2;
  std::chrono::milliseconds backoff{500};  // doubled after every failed attempt
};

class BackendError : public Error {
 public:
  using Error::Error;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual const std::string& identity() const = 0;
  // One attempt; throws BackendError on timeout, transport failure,
  // nonzero exit or malformed response.
  virtual std::string complete(const std::string& prompt, const GenerationParams& params) = 0;
};

std::unique_ptr<Backend> make_backend(const BackendSpec& spec);

struct RetryPolicy {
  int max_retries = 2;
  std::chrono::milliseconds backoff{500};
};

struct Generation {
  bool ok = false;
  std::string text;
  std::string error;  // last error when !ok
  int attempts = 0;
};

// Calls the backend, retrying with exponential backoff. Stop sequences are
// applied to the returned text.
Generation generate(Backend& backend, const std::string& prompt, const GenerationParams& params,
                    const RetryPolicy& retry);

// Cuts `text` at the earliest occurrence of any stop sequence.
std::string apply_stop_sequences(std::string text, const std::vector<std::string>& stop);

}  // namespace sumaug

#endif  // SUMAUG_BACKEND_H_
