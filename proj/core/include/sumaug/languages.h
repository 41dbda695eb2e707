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

#ifndef SUMAUG_LANGUAGES_H_
#define SUMAUG_LANGUAGES_H_

#include <span>
#include <string>
#include <string_view>

namespace sumaug {

struct LanguageInfo {
  std::string_view code;  // ISO 639-3
  std::string_view name;  // English name, used to fill prompt templates
  // Sentence terminators beyond the default `.`, `!`, `?`, `…`.
  std::u32string_view extra_terminators;
};

// Returns nullptr for codes outside the built-in table.
const LanguageInfo* find_language(std::string_view code);

std::span<const LanguageInfo> known_languages();

// English name for a code; the code itself when unknown.
std::string language_name(std::string_view code);

}  // namespace sumaug

#endif  // SUMAUG_LANGUAGES_H_
