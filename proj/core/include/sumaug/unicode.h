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

#ifndef SUMAUG_UNICODE_H_
#define SUMAUG_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sumaug::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at byte offset `pos` and advances `pos`.
// Ill-formed sequences decode to U+FFFD and consume one byte.
char32_t next_code_point(std::string_view text, std::size_t& pos);

std::u32string decode(std::string_view text);
void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

bool is_valid_utf8(std::string_view text);

bool is_space(char32_t cp);
bool is_letter_or_mark(char32_t cp);
bool is_uppercase(char32_t cp);
bool is_lowercase(char32_t cp);

// True for code points of scripts written without spaces between words
// (Khmer, Lao, Burmese).
bool is_unspaced_script(char32_t cp);

std::string_view trim(std::string_view text);

// Number of code points that are not whitespace.
std::size_t count_non_space(std::string_view text);

// Extended grapheme clusters, as views into `text`.
std::vector<std::string_view> graphemes(std::string_view text);

// Words according to Unicode word-boundary rules. Segments made only of
// spaces or punctuation are dropped.
std::vector<std::string_view> words(std::string_view text);

std::string fold_case(std::string_view text);

// Display width approximated as the number of grapheme clusters.
std::size_t display_width(std::string_view text);

}  // namespace sumaug::unicode

#endif  // SUMAUG_UNICODE_H_
