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

#include "sumaug/postprocess.h"

#include <fmt/format.h>

#include "sumaug/error.h"
#include "sumaug/records.h"
#include "sumaug/segment.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

constexpr std::string_view kDefaultPatterns = R"(# Commentary patterns: `category: glob`, tried group by group in file order.
# Globs are case-insensitive and must match the whole sentence.

# Apologies and refusals.
refusal: *i'm sorry*
refusal: *i am sorry*
refusal: *i apologize*
refusal: *i cannot *
refusal: *i can't *
refusal: *i'm unable*
refusal: *i am unable*
refusal: *having difficulty understanding*
refusal: *appears to be written in*
refusal: *as an ai*

# Requests for the text that was already given.
asks_for_text: *could you please rephrase*
asks_for_text: *please provide the*
asks_for_text: *i need the article*
asks_for_text: *i need the text*
asks_for_text: *share the article*
asks_for_text: *paste the article*

# Translations offered or mentioned.
translation_mention: translation:*
translation_mention: translated:*
translation_mention: *here is the translation*
translation_mention: *here's the translation*
translation_mention: *translates to*
translation_mention: *translated into*
translation_mention: *english translation*
translation_mention: (translation*

# Transliteration and pronunciation guides.
transliteration_pronunciation: *pronounced*
transliteration_pronunciation: *pronunciation*
transliteration_pronunciation: *transliteration*
transliteration_pronunciation: *transliterated*

# Preambles, sign-offs and other remarks about the answer itself.
meta_other: here is *summary*
meta_other: here's *summary*
meta_other: *summary in *:
meta_other: summary:*
meta_other: sure*
meta_other: certainly*
meta_other: i'd be happy to help*
meta_other: note:*
meta_other: *i hope this helps*
)";

std::u32string normalize_for_match(std::string_view text) {
  std::u32string out = unicode::decode(unicode::fold_case(unicode::trim(text)));
  for (char32_t& c : out) {
    if (c == U'’' || c == U'‘' || c == U'ʼ') c = U'\'';
  }
  return out;
}

}  // namespace

std::string_view to_string(CommentaryCategory c) {
  switch (c) {
    case CommentaryCategory::kRefusal: return "refusal";
    case CommentaryCategory::kEnglishSummary: return "english_summary";
    case CommentaryCategory::kAsksForText: return "asks_for_text";
    case CommentaryCategory::kTranslationMention: return "translation_mention";
    case CommentaryCategory::kTransliterationPronunciation: return "transliteration_pronunciation";
    case CommentaryCategory::kMetaOther: return "meta_other";
    case CommentaryCategory::kNone: return "none";
  }
  return "none";
}

CommentaryCategory parse_commentary_category(std::string_view name) {
  for (auto c : kCommentaryCategories) {
    if (to_string(c) == name) return c;
  }
  if (name == "none") return CommentaryCategory::kNone;
  throw ConfigError("unknown commentary category `" + std::string(name) + "`");
}

bool glob_match(std::u32string_view pattern, std::u32string_view text) {
  // Iterative matcher with single-star backtracking.
  std::size_t p = 0, t = 0;
  std::size_t star = std::u32string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == U'?' || pattern[p] == text[t])) {
      ++p, ++t;
    } else if (p < pattern.size() && pattern[p] == U'*') {
      star = p++;
      mark = t;
    } else if (star != std::u32string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == U'*') ++p;
  return p == pattern.size();
}

PatternTable PatternTable::parse(std::string_view text, std::string_view source) {
  PatternTable table;
  std::vector<std::vector<Rule>> groups;
  std::vector<CommentaryCategory> order;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = unicode::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError(fmt::format("{}:{}: expected `category: pattern`", source, line_no));
    }
    CommentaryCategory cat;
    try {
      cat = parse_commentary_category(unicode::trim(line.substr(0, colon)));
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("{}:{}: {}", source, line_no, e.what()));
    }
    if (cat == CommentaryCategory::kNone) {
      throw ConfigError(fmt::format("{}:{}: `none` cannot be a pattern category", source, line_no));
    }
    const std::string_view pattern = unicode::trim(line.substr(colon + 1));
    if (pattern.empty()) throw ConfigError(fmt::format("{}:{}: empty pattern", source, line_no));
    std::size_t g = 0;
    while (g < order.size() && order[g] != cat) ++g;
    if (g == order.size()) {
      order.push_back(cat);
      groups.emplace_back();
    }
    groups[g].push_back({cat, normalize_for_match(pattern)});
  }
  for (auto& group : groups) {
    for (auto& r : group) table.rules_.push_back(std::move(r));
  }
  return table;
}

PatternTable PatternTable::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

std::string_view PatternTable::default_text() { return kDefaultPatterns; }

const PatternTable& PatternTable::defaults() {
  static const PatternTable kTable = parse(kDefaultPatterns, "default patterns");
  return kTable;
}

CommentaryCategory PatternTable::match(std::string_view sentence) const {
  const std::u32string text = normalize_for_match(sentence);
  for (const auto& r : rules_) {
    if (glob_match(r.pattern, text)) return r.category;
  }
  return CommentaryCategory::kNone;
}

CommentaryCategory categorize(std::string_view sentence, const PatternTable& patterns,
                              bool english) {
  const CommentaryCategory c = patterns.match(sentence);
  if (c != CommentaryCategory::kNone) return c;
  return english ? CommentaryCategory::kEnglishSummary : CommentaryCategory::kNone;
}

CleanResult strip_english_commentary(std::string_view raw, std::string_view target_lang,
                                     const LanguageIdentifier& id, const PatternTable& patterns,
                                     const StripOptions& options) {
  CleanResult out;
  const SentenceSegmenter segmenter(target_lang);
  const std::vector<SentenceSpan> spans = segmenter.spans(raw);
  const bool check_language = target_lang != "eng";

  std::vector<bool> keep(spans.size(), true);
  std::size_t removed_chars = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const std::string_view sentence = raw.substr(spans[i].begin, spans[i].end - spans[i].begin);
    const bool english = check_language && id.classify(sentence).lang == "eng";
    const CommentaryCategory patterned = patterns.match(sentence);
    if (!english && patterned == CommentaryCategory::kNone) continue;
    keep[i] = false;
    removed_chars += unicode::count_non_space(sentence);
    out.removed.push_back({spans[i].begin, spans[i].end, std::string(sentence),
                           patterned != CommentaryCategory::kNone ? patterned
                                                                  : CommentaryCategory::kEnglishSummary});
  }

  // Each kept sentence is followed by its original separator, up to the
  // next sentence.
  std::string cleaned;
  std::size_t pending_sep_begin = 0, pending_sep_end = 0;
  bool have_pending = false;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (!keep[i]) continue;
    if (have_pending) cleaned.append(raw.substr(pending_sep_begin, pending_sep_end - pending_sep_begin));
    cleaned.append(raw.substr(spans[i].begin, spans[i].end - spans[i].begin));
    pending_sep_begin = spans[i].end;
    pending_sep_end = i + 1 < spans.size() ? spans[i + 1].begin : spans[i].end;
    have_pending = true;
  }

  const std::size_t total = unicode::count_non_space(raw);
  out.removal_ratio = total == 0 ? 0.0 : static_cast<double>(removed_chars) / static_cast<double>(total);
  // Primary category: the one covering the most removed characters; ties
  // go to the earlier span.
  std::map<CommentaryCategory, std::size_t> weight;
  for (const auto& span : out.removed) weight[span.category] += unicode::count_non_space(span.text);
  std::size_t best = 0;
  for (const auto& span : out.removed) {
    if (weight[span.category] > best) {
      best = weight[span.category];
      out.category = span.category;
    }
  }
  out.empty = !spans.empty() && cleaned.empty();
  if (out.empty && options.fallback_to_raw) {
    out.cleaned = std::string(raw);
    out.fell_back = true;
  } else {
    out.cleaned = std::move(cleaned);
  }
  return out;
}

std::vector<LeakageRow> leakage_report(const std::vector<LeakageInput>& records,
                                       const LanguageIdentifier& id, const PatternTable& patterns) {
  struct Acc {
    std::size_t n = 0;
    double english = 0.0;
    std::size_t fully = 0;
    std::size_t empty = 0;
    std::map<CommentaryCategory, std::size_t> categories;
  };
  std::map<std::pair<std::string, std::string>, Acc> acc;
  for (const auto& r : records) {
    Acc& a = acc[{r.model, r.lang}];
    ++a.n;
    const EnglishProportion ep = english_proportion(r.text, id, r.lang);
    a.english += ep.percent;
    if (ep.fully_english && r.lang != "eng") ++a.fully;
    const CleanResult c = strip_english_commentary(r.text, r.lang, id, patterns);
    if (c.empty) ++a.empty;
    std::map<CommentaryCategory, bool> seen;
    for (const auto& span : c.removed) seen[span.category] = true;
    for (const auto& [cat, present] : seen) ++a.categories[cat];
  }
  std::vector<LeakageRow> rows;
  for (const auto& [key, a] : acc) {
    LeakageRow row;
    row.model = key.first;
    row.lang = key.second;
    row.n = a.n;
    const double n = static_cast<double>(a.n);
    row.english_percent = a.english / n;
    row.fully_english_percent = 100.0 * static_cast<double>(a.fully) / n;
    row.empty_after_clean_percent = 100.0 * static_cast<double>(a.empty) / n;
    for (auto cat : kCommentaryCategories) {
      auto it = a.categories.find(cat);
      row.category_percent[cat] = it == a.categories.end() ? 0.0 : 100.0 * static_cast<double>(it->second) / n;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string leakage_csv(const std::vector<LeakageRow>& rows) {
  std::string out = "model,lang,n,pct_english,pct_fully_english,pct_empty_after_clean";
  for (auto cat : kCommentaryCategories) out += fmt::format(",pct_{}", to_string(cat));
  out += "\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{:.2f},{:.2f},{:.2f}", r.model, r.lang, r.n, r.english_percent,
                       r.fully_english_percent, r.empty_after_clean_percent);
    for (auto cat : kCommentaryCategories) out += fmt::format(",{:.2f}", r.category_percent.at(cat));
    out += "\n";
  }
  return out;
}

}  // namespace sumaug
