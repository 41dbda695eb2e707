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

#include "sumaug/unicode.h"

#include <memory>

#include <unicode/brkiter.h>
#include <unicode/uchar.h>
#include <unicode/utext.h>

#include "sumaug/error.h"

namespace sumaug::unicode {
namespace {

// ICU break iterators are expensive to create and not thread safe; each
// thread keeps its own clone.
enum class BreakKind { kCharacter, kWord };

icu::BreakIterator& thread_iterator(BreakKind kind) {
  thread_local std::unique_ptr<icu::BreakIterator> character;
  thread_local std::unique_ptr<icu::BreakIterator> word;
  auto& slot = kind == BreakKind::kCharacter ? character : word;
  if (!slot) {
    UErrorCode status = U_ZERO_ERROR;
    if (kind == BreakKind::kCharacter) {
      slot.reset(icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(), status));
    } else {
      slot.reset(icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
    }
    if (U_FAILURE(status) || !slot) {
      throw Error(std::string("ICU break iterator unavailable: ") + u_errorName(status));
    }
  }
  return *slot;
}

class Utf8Text {
 public:
  explicit Utf8Text(std::string_view text) {
    UErrorCode status = U_ZERO_ERROR;
    ut_ = utext_openUTF8(nullptr, text.data(), static_cast<int64_t>(text.size()), &status);
    if (U_FAILURE(status)) throw Error("utext_openUTF8 failed");
  }
  ~Utf8Text() { utext_close(ut_); }
  Utf8Text(const Utf8Text&) = delete;
  Utf8Text& operator=(const Utf8Text&) = delete;
  UText* get() { return ut_; }

 private:
  UText* ut_ = nullptr;
};

}  // namespace

char32_t next_code_point(std::string_view text, std::size_t& pos) {
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  const unsigned char lead = s[pos];
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + len > n) {
    ++pos;
    return kReplacement;
  }
  for (int i = 1; i < len; ++i) {
    const unsigned char c = s[pos + i];
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kReplacement;
  }
  pos += len;
  return cp;
}

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) out.push_back(next_code_point(text, pos));
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

bool is_valid_utf8(std::string_view text) {
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t start = pos;
    const char32_t cp = next_code_point(text, pos);
    // A genuine U+FFFD in the input is three bytes long.
    if (cp == kReplacement && pos - start == 1) return false;
  }
  return true;
}

bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

bool is_letter_or_mark(char32_t cp) {
  const auto mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
  return (mask & (U_GC_L_MASK | U_GC_M_MASK)) != 0;
}

bool is_uppercase(char32_t cp) { return u_isupper(static_cast<UChar32>(cp)); }
bool is_lowercase(char32_t cp) { return u_islower(static_cast<UChar32>(cp)); }

bool is_unspaced_script(char32_t cp) {
  return (cp >= 0x1780 && cp <= 0x17FF) ||  // Khmer
         (cp >= 0x19E0 && cp <= 0x19FF) ||  // Khmer symbols
         (cp >= 0x0E80 && cp <= 0x0EFF) ||  // Lao
         (cp >= 0x1000 && cp <= 0x109F) ||  // Myanmar
         (cp >= 0xAA60 && cp <= 0xAA7F) ||  // Myanmar extended-A
         (cp >= 0xA9E0 && cp <= 0xA9FF);    // Myanmar extended-B
}

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t next = begin;
    if (!is_space(next_code_point(text, next))) break;
    begin = next;
  }
  std::size_t end = text.size();
  while (end > begin) {
    std::size_t start = end - 1;
    while (start > begin && (static_cast<unsigned char>(text[start]) & 0xC0) == 0x80) --start;
    std::size_t probe = start;
    if (!is_space(next_code_point(text, probe))) break;
    end = start;
  }
  return text.substr(begin, end - begin);
}

std::size_t count_non_space(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    if (!is_space(next_code_point(text, pos))) ++count;
  }
  return count;
}

std::vector<std::string_view> graphemes(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  Utf8Text ut(text);
  auto& it = thread_iterator(BreakKind::kCharacter);
  UErrorCode status = U_ZERO_ERROR;
  it.setText(ut.get(), status);
  if (U_FAILURE(status)) throw Error("grapheme segmentation failed");
  int32_t start = it.first();
  for (int32_t end = it.next(); end != icu::BreakIterator::DONE; start = end, end = it.next()) {
    out.push_back(text.substr(start, end - start));
  }
  return out;
}

std::vector<std::string_view> words(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  Utf8Text ut(text);
  auto& it = thread_iterator(BreakKind::kWord);
  UErrorCode status = U_ZERO_ERROR;
  it.setText(ut.get(), status);
  if (U_FAILURE(status)) throw Error("word segmentation failed");
  int32_t start = it.first();
  for (int32_t end = it.next(); end != icu::BreakIterator::DONE; start = end, end = it.next()) {
    if (it.getRuleStatus() != UBRK_WORD_NONE) {
      out.push_back(text.substr(start, end - start));
      continue;
    }
    // Rule status NONE covers spaces and punctuation, but also symbols and
    // isolated marks; keep segments that contain a letter or digit.
    const std::string_view seg = text.substr(start, end - start);
    for (std::size_t pos = 0; pos < seg.size();) {
      const char32_t cp = next_code_point(seg, pos);
      if (is_letter_or_mark(cp) && !u_ispunct(static_cast<UChar32>(cp))) {
        out.push_back(seg);
        break;
      }
    }
  }
  return out;
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const char32_t cp = next_code_point(text, pos);
    append(out, static_cast<char32_t>(u_foldCase(static_cast<UChar32>(cp), U_FOLD_CASE_DEFAULT)));
  }
  return out;
}

std::size_t display_width(std::string_view text) {
  std::size_t ascii = 0;
  for (char c : text) {
    if (static_cast<unsigned char>(c) >= 0x80) return graphemes(text).size();
    ++ascii;
  }
  return ascii;
}

}  // namespace sumaug::unicode
