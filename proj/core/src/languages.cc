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

#include "sumaug/languages.h"

#include <algorithm>
#include <array>

namespace sumaug {
namespace {

constexpr std::u32string_view kArabicScript = U"؟۔";
constexpr std::u32string_view kEthiopic = U"።፧";
constexpr std::u32string_view kDanda = U"।॥";

// Sorted by code.
constexpr std::array kLanguages = {
    LanguageInfo{"amh", "Amharic", kEthiopic},
    LanguageInfo{"ara", "Arabic", kArabicScript},
    LanguageInfo{"aze", "Azerbaijani", U""},
    LanguageInfo{"ben", "Bengali", kDanda},
    LanguageInfo{"bos", "Bosnian", U""},
    LanguageInfo{"ckb", "Sorani Kurdish", kArabicScript},
    LanguageInfo{"div", "Dhivehi", kArabicScript},
    LanguageInfo{"eng", "English", U""},
    LanguageInfo{"fas", "Persian", kArabicScript},
    LanguageInfo{"hat", "Haitian Creole", U""},
    LanguageInfo{"hin", "Hindi", kDanda},
    LanguageInfo{"hye", "Armenian", U"։՜՞"},
    LanguageInfo{"ibo", "Igbo", U""},
    LanguageInfo{"ind", "Indonesian", U""},
    LanguageInfo{"kat", "Georgian", U""},
    LanguageInfo{"khm", "Khmer", U"។៕"},
    LanguageInfo{"kin", "Kinyarwanda", U""},
    LanguageInfo{"kir", "Kyrgyz", U""},
    LanguageInfo{"kmr", "Kurmanji Kurdish", U""},
    LanguageInfo{"kor", "Korean", U""},
    LanguageInfo{"lao", "Lao", U""},
    LanguageInfo{"mkd", "Macedonian", U""},
    LanguageInfo{"mya", "Burmese", U"။"},
    LanguageInfo{"nep", "Nepali", kDanda},
    LanguageInfo{"orm", "Oromo", U""},
    LanguageInfo{"pus", "Pashto", kArabicScript},
    LanguageInfo{"run", "Kirundi", U""},
    LanguageInfo{"sin", "Sinhala", U""},
    LanguageInfo{"som", "Somali", U""},
    LanguageInfo{"sqi", "Albanian", U""},
    LanguageInfo{"srp", "Serbian", U""},
    LanguageInfo{"swa", "Swahili", U""},
    LanguageInfo{"tgk", "Tajik", U""},
    LanguageInfo{"tha", "Thai", U""},
    LanguageInfo{"tir", "Tigrinya", kEthiopic},
    LanguageInfo{"tur", "Turkish", U""},
    LanguageInfo{"ukr", "Ukrainian", U""},
    LanguageInfo{"urd", "Urdu", kArabicScript},
    LanguageInfo{"uzb", "Uzbek", U""},
    LanguageInfo{"yor", "Yoruba", U""},
};

static_assert(std::ranges::is_sorted(kLanguages, {}, &LanguageInfo::code));

}  // namespace

const LanguageInfo* find_language(std::string_view code) {
  auto it = std::ranges::lower_bound(kLanguages, code, {}, &LanguageInfo::code);
  if (it == kLanguages.end() || it->code != code) return nullptr;
  return &*it;
}

std::span<const LanguageInfo> known_languages() { return kLanguages; }

std::string language_name(std::string_view code) {
  const LanguageInfo* info = find_language(code);
  return std::string(info ? info->name : code);
}

}  // namespace sumaug
