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

#include "sumaug/cache.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "sumaug/error.h"
#include "sumaug/records.h"

namespace sumaug {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string prompt_hash(const std::string& template_id, const Bindings& bindings,
                        const GenerationParams& params, const std::string& identity) {
  // nlohmann::json keeps object keys sorted, so the encoding is canonical.
  nlohmann::json key = {
      {"template", template_id},
      {"bindings", bindings},
      {"params",
       {{"max_tokens", params.max_tokens}, {"temperature", params.temperature}, {"stop", params.stop}}},
      {"model", identity},
  };
  return sha256_hex(key.dump());
}

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<std::string> ResponseCache::get(const std::string& hash) const {
  std::ifstream in(path_for(hash), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResponseCache::put(const std::string& hash, std::string_view response) {
  std::lock_guard lock(write_mu_);
  write_file_atomic(path_for(hash), response);
}

}  // namespace sumaug
