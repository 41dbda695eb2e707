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

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <nlohmann/json.hpp>
#include <string>

#include "oracles.h"
#include "profiles.h"
#include "sumaug/error.h"
#include "sumaug/postprocess.h"
#include "sumaug/records.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

using nlohmann::json;

std::vector<json> read_jsonl(const std::string& name) {
  std::ifstream in(oracle::source_dir() / "tests/data/postprocess" / name);
  std::vector<json> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

const LanguageIdentifier& id() { return testing::seed_identifier(); }
const PatternTable& patterns() { return PatternTable::defaults(); }

TEST(Glob, Basics) {
  EXPECT_TRUE(glob_match(U"*sorry*", U"i'm sorry, no"));
  EXPECT_TRUE(glob_match(U"a?c", U"abc"));
  EXPECT_FALSE(glob_match(U"a?c", U"ac"));
  EXPECT_TRUE(glob_match(U"*", U""));
  EXPECT_FALSE(glob_match(U"translation:*", U"no translation: here"));
}

TEST(Patterns, DefaultFileMatchesEmbeddedTable) {
  EXPECT_EQ(read_file(oracle::source_dir() / "data/patterns/default.txt"), PatternTable::default_text());
  EXPECT_GT(patterns().size(), 10u);
}

TEST(Patterns, ParseErrorsNameTheLine) {
  try {
    PatternTable::parse("refusal: *sorry*\nbogus line\n", "p.txt");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("p.txt:2"), std::string::npos);
  }
  EXPECT_THROW(PatternTable::parse("unknown_cat: *x*\n"), ConfigError);
}

TEST(Categorize, TableExamples) {
  EXPECT_EQ(categorize("Could you please rephrase or translate the question into English so I can "
                       "better understand and provide an accurate response?",
                       patterns()),
            CommentaryCategory::kAsksForText);
  EXPECT_EQ(categorize("Translation: the river rose.", patterns()), CommentaryCategory::kTranslationMention);
  EXPECT_EQ(categorize("(pronounced kur-MAN-jee)", patterns()),
            CommentaryCategory::kTransliterationPronunciation);
  EXPECT_EQ(categorize("The minister visited the province.", patterns()),
            CommentaryCategory::kEnglishSummary);
  EXPECT_EQ(categorize("I’m sorry, I cannot do that.", patterns()), CommentaryCategory::kRefusal);
}

TEST(Strip, PreambleRemoved) {
  const std::string ka = "მთავრობამ ახალი გზის მშენებლობა დაიწყო.";
  const auto r = strip_english_commentary("Here is the summary:\n" + ka, "kat", id(), patterns());
  EXPECT_EQ(r.cleaned, ka);
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.category, CommentaryCategory::kMetaOther);
  EXPECT_FALSE(r.empty);
}

TEST(Strip, TargetOnlyIsUnchanged) {
  const std::string ka = "მთავრობამ ახალი გზის მშენებლობა დაიწყო. სკოლები დაიხურა.";
  const auto r = strip_english_commentary(ka, "kat", id(), patterns());
  EXPECT_EQ(r.cleaned, ka);
  EXPECT_EQ(r.category, CommentaryCategory::kNone);
  EXPECT_EQ(r.removal_ratio, 0.0);
}

TEST(Strip, RefusalFullyRemovedWithFallback) {
  const std::string raw = "I'm sorry, I'm having difficulty understanding the text you provided.";
  const auto r = strip_english_commentary(raw, "lao", id(), patterns());
  EXPECT_TRUE(r.empty);
  EXPECT_TRUE(r.fell_back);
  EXPECT_EQ(r.cleaned, raw);
  EXPECT_EQ(r.category, CommentaryCategory::kRefusal);
  EXPECT_EQ(r.removal_ratio, 1.0);
  StripOptions no_fallback;
  no_fallback.fallback_to_raw = false;
  EXPECT_EQ(strip_english_commentary(raw, "lao", id(), patterns(), no_fallback).cleaned, "");
}

TEST(Strip, FixtureMatchesGolden) {
  const auto cases = read_jsonl("cases.jsonl");
  const auto golden = read_jsonl("golden.jsonl");
  ASSERT_EQ(cases.size(), 10u);
  ASSERT_EQ(golden.size(), 10u);
  StripOptions opts;
  opts.fallback_to_raw = false;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const auto& g = golden[i];
    ASSERT_EQ(c["id"], g["id"]);
    const auto r = strip_english_commentary(c["output"].get<std::string>(), c["lang"].get<std::string>(),
                                            id(), patterns(), opts);
    EXPECT_EQ(r.cleaned, g["cleaned"].get<std::string>()) << g["id"];
    EXPECT_EQ(std::string(to_string(r.category)), g["category"].get<std::string>()) << g["id"];
    EXPECT_EQ(r.empty, g["empty"].get<bool>()) << g["id"];
    std::vector<std::string> removed;
    for (const auto& span : r.removed) removed.emplace_back(to_string(span.category));
    EXPECT_EQ(removed, g["removed"].get<std::vector<std::string>>()) << g["id"];
  }
}

TEST(Strip, IdempotentOnFixture) {
  StripOptions opts;
  opts.fallback_to_raw = false;
  for (const auto& c : read_jsonl("cases.jsonl")) {
    const std::string lang = c["lang"].get<std::string>();
    const auto once = strip_english_commentary(c["output"].get<std::string>(), lang, id(), patterns(), opts);
    const auto twice = strip_english_commentary(once.cleaned, lang, id(), patterns(), opts);
    EXPECT_EQ(twice.cleaned, once.cleaned) << c["id"];
    EXPECT_TRUE(twice.removed.empty()) << c["id"];
  }
}

TEST(Leakage, AllCleanIsZero) {
  std::vector<LeakageInput> in;
  for (int i = 0; i < 4; ++i) in.push_back({"m", "kat", std::to_string(i), "მთავრობამ ახალი გზა გახსნა."});
  const auto rows = leakage_report(in, id(), patterns());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].english_percent, 0.0);
  EXPECT_EQ(rows[0].fully_english_percent, 0.0);
  for (auto c : kCommentaryCategories) EXPECT_EQ(rows[0].category_percent.at(c), 0.0);
}

TEST(Leakage, TwoOfTenEnglishSummaries) {
  std::vector<LeakageInput> in;
  for (int i = 0; i < 10; ++i) {
    const std::string text = i < 2 ? "The government opened a new road in the capital."
                                    : "მთავრობამ დედაქალაქში ახალი გზა გახსნა.";
    in.push_back({"m", "kat", std::to_string(i), text});
  }
  const auto rows = leakage_report(in, id(), patterns());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_DOUBLE_EQ(rows[0].category_percent.at(CommentaryCategory::kEnglishSummary), 20.0);
  EXPECT_DOUBLE_EQ(rows[0].fully_english_percent, 20.0);
  EXPECT_DOUBLE_EQ(rows[0].english_percent, 20.0);
}

TEST(Leakage, FixtureMatchesHandTally) {
  // Counts from the annotated golden file, per language group.
  std::vector<LeakageInput> in;
  for (const auto& c : read_jsonl("cases.jsonl")) {
    in.push_back({"m", c["lang"].get<std::string>(), c["id"].get<std::string>(), c["output"].get<std::string>()});
  }
  const auto rows = leakage_report(in, id(), patterns());
  std::map<std::string, std::map<std::string, int>> tally;
  std::map<std::string, int> n;
  const auto cases = read_jsonl("cases.jsonl");
  const auto golden = read_jsonl("golden.jsonl");
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const std::string lang = cases[i]["lang"].get<std::string>();
    ++n[lang];
    std::set<std::string> seen;
    for (const auto& c : golden[i]["removed"]) seen.insert(c.get<std::string>());
    for (const auto& c : seen) ++tally[lang][c];
    if (golden[i]["empty"].get<bool>()) ++tally[lang]["empty"];
  }
  for (const auto& row : rows) {
    EXPECT_EQ(row.n, static_cast<std::size_t>(n[row.lang]));
    for (auto c : kCommentaryCategories) {
      const double want = 100.0 * tally[row.lang][std::string(to_string(c))] / n[row.lang];
      EXPECT_DOUBLE_EQ(row.category_percent.at(c), want) << row.lang << " " << to_string(c);
    }
    EXPECT_DOUBLE_EQ(row.empty_after_clean_percent, 100.0 * tally[row.lang]["empty"] / n[row.lang]);
  }
}

}  // namespace
}  // namespace sumaug
