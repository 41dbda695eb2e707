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

#ifndef SUMAUG_POSTPROCESS_H_
#define SUMAUG_POSTPROCESS_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sumaug/langid.h"

namespace sumaug {

enum class CommentaryCategory {
  kRefusal,
  kEnglishSummary,
  kAsksForText,
  kTranslationMention,
  kTransliterationPronunciation,
  kMetaOther,
  kNone,
};

inline constexpr std::array kCommentaryCategories = {
    CommentaryCategory::kRefusal,
    CommentaryCategory::kEnglishSummary,
    CommentaryCategory::kAsksForText,
    CommentaryCategory::kTranslationMention,
    CommentaryCategory::kTransliterationPronunciation,
    CommentaryCategory::kMetaOther,
};

std::string_view to_string(CommentaryCategory c);
CommentaryCategory parse_commentary_category(std::string_view name);

// Ordered `category: pattern` rules. Patterns are case-insensitive globs
// (`*` any run, `?` one character) matched against the whole sentence;
// typographic apostrophes match ASCII ones. Groups are tried in order of
// their first appearance in the file.
class PatternTable {
 public:
  static PatternTable parse(std::string_view text, std::string_view source = "<patterns>");
  static PatternTable load(const std::filesystem::path& path);
  // The table shipped as data/patterns/default.txt.
  static const PatternTable& defaults();
  static std::string_view default_text();

  // First matching category, or kNone.
  CommentaryCategory match(std::string_view sentence) const;
  std::size_t size() const { return rules_.size(); }

 private:
  struct Rule {
    CommentaryCategory category;
    std::u32string pattern;  // folded
  };
  std::vector<Rule> rules_;
};

bool glob_match(std::u32string_view pattern, std::u32string_view text);

// Category for a sentence already flagged for removal: the pattern group
// that matches first, else english_summary for English sentences.
CommentaryCategory categorize(std::string_view sentence, const PatternTable& patterns,
                              bool english = true);

struct RemovedSpan {
  std::size_t begin = 0;  // byte offsets into the raw text
  std::size_t end = 0;
  std::string text;
  CommentaryCategory category = CommentaryCategory::kNone;
};

struct CleanResult {
  std::string cleaned;
  std::vector<RemovedSpan> removed;
  double removal_ratio = 0.0;  // removed / total non-whitespace characters
  bool empty = false;          // every sentence was removed
  bool fell_back = false;      // `cleaned` holds the raw text because of `empty`
  // Category covering the most removed characters.
  CommentaryCategory category = CommentaryCategory::kNone;
};

struct StripOptions {
  bool fallback_to_raw = true;
};

// Removes sentences that are English (when the target is not English) or
// that match a pattern. Kept sentences stay in order with their original
// separators.
CleanResult strip_english_commentary(std::string_view raw, std::string_view target_lang,
                                     const LanguageIdentifier& id, const PatternTable& patterns,
                                     const StripOptions& options = {});

struct LeakageInput {
  std::string model;
  std::string lang;
  std::string id;
  std::string text;
};

struct LeakageRow {
  std::string model;
  std::string lang;
  std::size_t n = 0;
  double english_percent = 0.0;        // mean within-summary English share
  double fully_english_percent = 0.0;  // share of summaries entirely English
  double empty_after_clean_percent = 0.0;
  // Share of summaries with at least one removed sentence per category.
  std::map<CommentaryCategory, double> category_percent;
};

std::vector<LeakageRow> leakage_report(const std::vector<LeakageInput>& records,
                                       const LanguageIdentifier& id, const PatternTable& patterns);

std::string leakage_csv(const std::vector<LeakageRow>& rows);

}  // namespace sumaug

#endif  // SUMAUG_POSTPROCESS_H_
