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

#include "sumaug/langid.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include <spdlog/spdlog.h>

#include "sumaug/error.h"
#include "sumaug/records.h"
#include "sumaug/segment.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

constexpr std::size_t kRecommendedSeedChars = 1000;

using NgramTables = std::array<std::map<std::string, std::uint64_t>, kMaxNgramOrder>;

// Calls fn(order, gram) for every n-gram occurrence of the normalized text.
template <typename Fn>
void for_each_ngram(const std::vector<std::u32string>& words, Fn&& fn) {
  for (const auto& w : words) {
    for (char32_t cp : w) {
      std::string g;
      unicode::append(g, cp);
      fn(1, g);
    }
    const std::u32string padded = U" " + w + U" ";
    for (int order = 2; order <= kMaxNgramOrder; ++order) {
      const auto n = static_cast<std::size_t>(order);
      for (std::size_t i = 0; i + n <= padded.size(); ++i) {
        fn(order, unicode::encode(std::u32string_view(padded).substr(i, n)));
      }
    }
  }
}

std::string escape(std::string_view gram) {
  std::string out;
  for (char c : gram) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case ' ': out += "\\s"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(s[i]);
      continue;
    }
    if (++i >= s.size()) throw DataError("profile: dangling escape");
    switch (s[i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 's': out.push_back(' '); break;
      default: throw DataError("profile: bad escape");
    }
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DataError("profile: bad number `" + std::string(s) + "`");
  }
  return v;
}

}  // namespace

std::vector<std::u32string> langid_words(std::string_view text) {
  std::vector<std::u32string> words;
  std::u32string current;
  for (std::size_t pos = 0; pos < text.size();) {
    const char32_t cp = unicode::next_code_point(text, pos);
    if (unicode::is_letter_or_mark(cp)) {
      const std::string folded = unicode::fold_case(unicode::encode(std::u32string(1, cp)));
      current += unicode::decode(folded);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

LangProfile::LangProfile(std::string lang, NgramTables counts, std::uint64_t training_chars)
    : lang_(std::move(lang)), counts_(std::move(counts)), training_chars_(training_chars) {
  for (int o = 0; o < kMaxNgramOrder; ++o) {
    for (const auto& [g, c] : counts_[o]) totals_[o] += c;
  }
}

std::uint64_t LangProfile::count(int order, const std::string& gram) const {
  const auto& table = counts_[order - 1];
  auto it = table.find(gram);
  return it == table.end() ? 0 : it->second;
}

double LangProfile::log_prob(int order, const std::string& gram) const {
  const double c = static_cast<double>(count(order, gram));
  const double denom = static_cast<double>(total(order)) + static_cast<double>(distinct(order)) + 1.0;
  return std::log((c + 1.0) / denom);
}

std::map<std::string, double> LangProfile::distribution(int order) const {
  std::map<std::string, double> out;
  const double n = static_cast<double>(total(order));
  for (const auto& [g, c] : counts_[order - 1]) out[g] = static_cast<double>(c) / n;
  return out;
}

std::string LangProfile::serialize() const {
  std::string out;
  out += std::string(kProfileMagic) + "\n";
  out += "lang " + lang_ + "\n";
  out += "chars " + std::to_string(training_chars_) + "\n";
  for (int o = 1; o <= kMaxNgramOrder; ++o) {
    out += "order " + std::to_string(o) + " " + std::to_string(counts_[o - 1].size()) + "\n";
    for (const auto& [g, c] : counts_[o - 1]) out += escape(g) + "\t" + std::to_string(c) + "\n";
  }
  return out;
}

LangProfile LangProfile::deserialize(std::string_view data) {
  std::istringstream in{std::string(data)};
  std::string line;
  auto expect_line = [&](const char* what) {
    if (!std::getline(in, line)) throw DataError(std::string("profile: truncated before ") + what);
  };
  expect_line("magic");
  if (line != kProfileMagic) throw DataError("profile: bad magic header");
  expect_line("lang");
  if (line.rfind("lang ", 0) != 0 || line.size() <= 5) throw DataError("profile: missing lang");
  std::string lang = line.substr(5);
  expect_line("chars");
  if (line.rfind("chars ", 0) != 0) throw DataError("profile: missing chars");
  const std::uint64_t chars = parse_u64(std::string_view(line).substr(6));
  NgramTables counts;
  for (int o = 1; o <= kMaxNgramOrder; ++o) {
    expect_line("order header");
    const std::string prefix = "order " + std::to_string(o) + " ";
    if (line.rfind(prefix, 0) != 0) throw DataError("profile: bad order header");
    const std::uint64_t entries = parse_u64(std::string_view(line).substr(prefix.size()));
    for (std::uint64_t e = 0; e < entries; ++e) {
      expect_line("n-gram entry");
      const auto tab = line.find('\t');
      if (tab == std::string::npos) throw DataError("profile: bad n-gram entry");
      counts[o - 1][unescape(std::string_view(line).substr(0, tab))] =
          parse_u64(std::string_view(line).substr(tab + 1));
    }
  }
  if (chars == 0) throw DataError("profile: zero training characters");
  return LangProfile(std::move(lang), std::move(counts), chars);
}

void LangProfile::save(const std::filesystem::path& path) const { write_file_atomic(path, serialize()); }

LangProfile LangProfile::load(const std::filesystem::path& path) {
  return deserialize(read_file(path));
}

LangProfile train_profile(std::string lang, std::string_view seed_text) {
  const std::vector<std::u32string> words = langid_words(seed_text);
  if (words.empty()) throw DataError("train_profile(" + lang + "): seed text has no letters");
  const std::size_t chars = unicode::count_non_space(seed_text);
  if (chars < kRecommendedSeedChars) {
    spdlog::warn("train_profile({}): seed text has only {} characters", lang, chars);
  }
  NgramTables counts;
  for_each_ngram(words, [&](int order, const std::string& gram) { ++counts[order - 1][gram]; });
  return LangProfile(std::move(lang), std::move(counts), chars);
}

LanguageIdentifier::LanguageIdentifier(std::vector<LangProfile> profiles, ClassifierOptions options)
    : profiles_(std::move(profiles)), options_(options) {
  if (profiles_.empty()) throw ConfigError("language identifier needs at least one profile");
}

LanguageIdentifier LanguageIdentifier::from_directory(const std::filesystem::path& dir,
                                                      ClassifierOptions options) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".lpro") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<LangProfile> profiles;
  for (const auto& f : files) profiles.push_back(LangProfile::load(f));
  if (profiles.empty()) throw ConfigError("no .lpro profiles in " + dir.string());
  return LanguageIdentifier(std::move(profiles), options);
}

bool LanguageIdentifier::has(std::string_view lang) const {
  for (const auto& p : profiles_) {
    if (p.lang() == lang) return true;
  }
  return false;
}

Classification LanguageIdentifier::classify(std::string_view text) const {
  Classification out;
  const std::vector<std::u32string> words = langid_words(text);
  if (words.empty()) return out;

  const std::size_t k = profiles_.size();
  std::vector<double> scores(k, 0.0);
  std::vector<std::size_t> known_letters(k, 0);
  std::size_t letters = 0;
  bool any_evidence = false;
  for_each_ngram(words, [&](int order, const std::string& gram) {
    bool seen_anywhere = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (profiles_[i].seen(order, gram)) {
        seen_anywhere = true;
        if (order == 1) ++known_letters[i];
      }
    }
    if (order == 1) ++letters;
    if (!seen_anywhere) return;
    any_evidence = true;
    for (std::size_t i = 0; i < k; ++i) scores[i] += profiles_[i].log_prob(order, gram);
  });
  if (!any_evidence) return out;

  std::size_t best = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  double second = -std::numeric_limits<double>::infinity();
  std::size_t second_idx = best;
  for (std::size_t i = 0; i < k; ++i) {
    if (i != best && scores[i] > second) second = scores[i], second_idx = i;
  }
  out.score = scores[best];
  out.margin = k == 1 ? std::numeric_limits<double>::infinity() : scores[best] - second;
  out.coverage = static_cast<double>(known_letters[best]) / static_cast<double>(letters);
  if (second_idx != best) out.runner_up = profiles_[second_idx].lang();
  if (out.margin >= options_.min_margin && out.coverage >= options_.min_coverage) {
    out.lang = profiles_[best].lang();
  }
  return out;
}

EnglishProportion english_proportion(std::string_view summary, const LanguageIdentifier& id,
                                     std::string_view target_lang) {
  if (!id.has("eng")) throw ConfigError("english_proportion needs an `eng` profile");
  EnglishProportion out;
  const std::size_t total = unicode::count_non_space(summary);
  if (total == 0) {
    out.empty = true;
    return out;
  }
  SentenceSegmenter segmenter(target_lang);
  std::size_t english = 0;
  bool all_english = true;
  for (const auto& span : segmenter.spans(summary)) {
    const std::string_view sentence = summary.substr(span.begin, span.end - span.begin);
    ++out.sentences;
    if (id.classify(sentence).lang == "eng") {
      english += unicode::count_non_space(sentence);
    } else {
      all_english = false;
    }
  }
  out.percent = 100.0 * static_cast<double>(english) / static_cast<double>(total);
  out.fully_english = all_english && out.sentences > 0;
  return out;
}

}  // namespace sumaug
