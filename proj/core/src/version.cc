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

#include "sumaug/version.h"

#include <string>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/opensslv.h>
#include <spdlog/version.h>
#include <unicode/uvernum.h>

namespace sumaug {

std::string_view version() { return SUMAUG_VERSION; }

std::string_view dependency_versions() {
  static const std::string kVersions = fmt::format(
      "icu/{} fmt/{}.{}.{} spdlog/{}.{}.{} nlohmann_json/{}.{}.{} openssl/{}", U_ICU_VERSION,
      FMT_VERSION / 10000, FMT_VERSION / 100 % 100, FMT_VERSION % 100, SPDLOG_VER_MAJOR,
      SPDLOG_VER_MINOR, SPDLOG_VER_PATCH, NLOHMANN_JSON_VERSION_MAJOR, NLOHMANN_JSON_VERSION_MINOR,
      NLOHMANN_JSON_VERSION_PATCH, OPENSSL_VERSION_TEXT);
  return kVersions;
}

}  // namespace sumaug
