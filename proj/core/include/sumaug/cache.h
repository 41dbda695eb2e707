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

#ifndef SUMAUG_CACHE_H_
#define SUMAUG_CACHE_H_

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "sumaug/backend.h"
#include "sumaug/prompt.h"

namespace sumaug {

std::string sha256_hex(std::string_view data);

// Content hash of everything that determines a completion: template id,
// bindings, generation parameters and backend identity.
std::string prompt_hash(const std::string& template_id, const Bindings& bindings,
                        const GenerationParams& params, const std::string& identity);

// Content-addressed response store: one file per prompt hash holding the raw
// completion bytes. Writes are serialized and atomic.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path dir);

  std::optional<std::string> get(const std::string& hash) const;
  void put(const std::string& hash, std::string_view response);
  std::filesystem::path path_for(const std::string& hash) const { return dir_ / hash; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::mutex write_mu_;
};

}  // namespace sumaug

#endif  // SUMAUG_CACHE_H_
