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

#include "sumaug/segment.h"

#include <mutex>
#include <set>

#include <spdlog/spdlog.h>

#include "sumaug/languages.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

constexpr std::u32string_view kDefaultTerminators = U".!?…";
constexpr std::u32string_view kClosers = U"\"')]}»›”’」』";

bool is_closer(char32_t cp) { return kClosers.find(cp) != std::u32string_view::npos; }

bool is_line_break(char32_t cp) {
  return cp == U'\n' || cp == U'\r' || cp == 0x0B || cp == 0x0C || cp == 0x85 || cp == 0x2028 ||
         cp == 0x2029;
}

void warn_unknown_language(std::string_view lang) {
  static std::mutex mu;
  static std::set<std::string, std::less<>> warned;
  std::lock_guard lock(mu);
  if (warned.insert(std::string(lang)).second) {
    spdlog::warn("unknown language code '{}': using default sentence terminators", lang);
  }
}

}  // namespace

SentenceSegmenter::SentenceSegmenter(std::string_view lang) : terminators_(kDefaultTerminators) {
  if (const LanguageInfo* info = find_language(lang)) {
    known_ = true;
    script_terminators_ = info->extra_terminators;
    terminators_ += info->extra_terminators;
  }
}

bool SentenceSegmenter::is_terminator(char32_t cp) const {
  return terminators_.find(cp) != std::u32string::npos;
}

bool SentenceSegmenter::is_script_terminator(char32_t cp) const {
  return script_terminators_.find(cp) != std::u32string::npos;
}

std::vector<SentenceSpan> SentenceSegmenter::spans(std::string_view text) const {
  // Decode once, keeping the byte offset of every code point.
  std::vector<char32_t> cps;
  std::vector<std::size_t> offsets;
  for (std::size_t pos = 0; pos < text.size();) {
    offsets.push_back(pos);
    cps.push_back(unicode::next_code_point(text, pos));
  }
  offsets.push_back(text.size());
  const std::size_t n = cps.size();

  std::vector<SentenceSpan> out;
  auto emit = [&](std::size_t from_cp, std::size_t to_cp) {
    const std::string_view raw = text.substr(offsets[from_cp], offsets[to_cp] - offsets[from_cp]);
    const std::string_view trimmed = unicode::trim(raw);
    if (trimmed.empty()) return;
    const std::size_t begin = static_cast<std::size_t>(trimmed.data() - text.data());
    out.push_back({begin, begin + trimmed.size()});
  };

  // An initial: one letter preceded by start, whitespace, `.` or an opener.
  auto single_letter_before = [&](std::size_t dot) {
    if (dot == 0 || !unicode::is_letter_or_mark(cps[dot - 1])) return false;
    if (dot == 1) return true;
    const char32_t before = cps[dot - 2];
    return unicode::is_space(before) || before == U'.' || before == U'(' || before == U'"';
  };
  auto next_word_length = [&](std::size_t from) {
    std::size_t i = from;
    while (i < n && unicode::is_space(cps[i]) && !is_line_break(cps[i])) ++i;
    std::size_t len = 0;
    while (i < n && unicode::is_letter_or_mark(cps[i])) ++i, ++len;
    return len;
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = cps[i];
    if (is_line_break(cp)) {
      emit(start, i);
      start = ++i;
      continue;
    }
    if (!is_terminator(cp)) {
      ++i;
      continue;
    }
    const std::size_t run_begin = i;
    bool hard = false;
    bool only_dot = true;
    while (i < n && is_terminator(cps[i])) {
      hard = hard || is_script_terminator(cps[i]);
      only_dot = only_dot && cps[i] == U'.';
      ++i;
    }
    while (i < n && is_closer(cps[i])) ++i;
    const bool at_gap = i == n || unicode::is_space(cps[i]);
    if (!hard && !at_gap) continue;
    if (!hard && only_dot && i == run_begin + 1 && single_letter_before(run_begin) &&
        next_word_length(i) > 1) {
      continue;
    }
    emit(start, i);
    start = i;
  }
  emit(start, n);
  return out;
}

std::vector<std::string> SentenceSegmenter::split(std::string_view text) const {
  std::vector<std::string> out;
  for (const SentenceSpan& s : spans(text)) out.emplace_back(text.substr(s.begin, s.end - s.begin));
  return out;
}

std::vector<std::string> segment_sentences(std::string_view text, std::string_view lang) {
  SentenceSegmenter segmenter(lang);
  if (!segmenter.known_language()) warn_unknown_language(lang);
  return segmenter.split(text);
}

}  // namespace sumaug
