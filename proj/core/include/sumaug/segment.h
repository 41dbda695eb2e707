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

#ifndef SUMAUG_SEGMENT_H_
#define SUMAUG_SEGMENT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sumaug {

// Byte range [begin, end) of one trimmed sentence inside the segmented text.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const SentenceSpan&) const = default;
};

// Rule-based sentence splitter driven by a per-language terminator table.
//
// Boundaries:
//   * line breaks always end a sentence;
//   * script terminators (Khmer KHAN, Armenian full stop, Ethiopic full stop,
//     Arabic question mark, ...) end a sentence wherever they occur;
//   * `.`, `!`, `?` and `…` end a sentence only when followed by whitespace
//     or the end of the text.
// Closing quotes and brackets directly after a terminator stay with the
// sentence. A single letter followed by `.` (an initial, as in "J. Smith")
// does not end a sentence when the next word is longer than one letter.
class SentenceSegmenter {
 public:
  explicit SentenceSegmenter(std::string_view lang);

  std::vector<SentenceSpan> spans(std::string_view text) const;
  std::vector<std::string> split(std::string_view text) const;

  bool known_language() const { return known_; }
  const std::u32string& terminators() const { return terminators_; }

 private:
  bool is_terminator(char32_t cp) const;
  bool is_script_terminator(char32_t cp) const;

  std::u32string terminators_;
  std::u32string script_terminators_;
  bool known_ = false;
};

// Convenience wrapper; warns once per unknown language code.
std::vector<std::string> segment_sentences(std::string_view text, std::string_view lang);

}  // namespace sumaug

#endif  // SUMAUG_SEGMENT_H_
