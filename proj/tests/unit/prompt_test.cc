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

#include <sstream>
#include <string>

#include "oracles.h"
#include "sumaug/error.h"
#include "sumaug/prompt.h"
#include "sumaug/records.h"

namespace sumaug {
namespace {

constexpr const char* kArticle = "Angkor Wat is a temple complex in Cambodia.";

std::string golden(const std::string& name) {
  return read_file(oracle::source_dir() / "tests/golden/prompts" / name);
}

std::map<std::string, std::string> golden_rubric() {
  std::map<std::string, std::string> out;
  std::istringstream in(golden("judge_rubric.tsv"));
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

TEST(Prompt, SmallMtExample) {
  const auto s = render_prompt(builtin_template(PromptRole::kSummarizeSmallMt),
                               {{"LANGUAGE", "Khmer"}, {"ARTICLE_TEXT", "T"}});
  EXPECT_EQ(s, "Write a summary for the following article in Khmer. \n T");
}

TEST(Prompt, TranslateExample) {
  const auto s = render_prompt(builtin_template(PromptRole::kTranslate),
                               {{"LANG", "English"}, {"ARTICLE_TEXT", "x"}});
  EXPECT_EQ(s.rfind("Translate the following text into English: ", 0), 0u);
}

TEST(Prompt, GoldenFiles) {
  const Bindings b = {{"LANGUAGE", "Khmer"}, {"LANG", "English"}, {"ARTICLE_TEXT", kArticle}};
  EXPECT_EQ(render_prompt(builtin_template(PromptRole::kSummarizeSmallMt), b),
            golden("summarize_small_mt.txt"));
  EXPECT_EQ(render_prompt(builtin_template(PromptRole::kSummarizeSmallChat), b),
            golden("summarize_small_chat.txt"));
  EXPECT_EQ(render_prompt(builtin_template(PromptRole::kSummarizeTwoSentence), b),
            golden("summarize_two_sentence.txt"));
  EXPECT_EQ(render_prompt(builtin_template(PromptRole::kTranslate), b), golden("translate.txt"));
}

TEST(Prompt, JudgeRubricGolden) {
  const auto g = golden_rubric();
  const auto& r = JudgeRubric::summary_quality();
  EXPECT_EQ(r.criteria, g.at("criteria"));
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(r.score_descriptions[i], g.at("score" + std::to_string(i + 1) + "_description"));
  }
  const auto text = render_prompt(builtin_template(PromptRole::kJudge), judge_bindings(r, "I", "R"));
  for (const auto& [k, v] : g) EXPECT_NE(text.find(v), std::string::npos) << k;
}

TEST(Prompt, UnboundPlaceholderNamed) {
  try {
    render_prompt(builtin_template(PromptRole::kTranslate), {{"LANG", "English"}});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("<<ARTICLE_TEXT>>"), std::string::npos);
  }
}

TEST(Prompt, SubstitutedTextIsNotRescanned) {
  PromptTemplate t{"t", PromptRole::kTranslate, "<<A>>|<<B>>"};
  EXPECT_EQ(render_prompt(t, {{"A", "<<B>>"}, {"B", "b"}}), "<<B>>|b");
}

TEST(Prompt, Placeholders) {
  EXPECT_EQ(placeholders(builtin_template(PromptRole::kSummarizeSmallChat).body),
            (std::vector<std::string>{"LANGUAGE", "ARTICLE_TEXT"}));
}

TEST(Prompt, RoleNamesRoundTrip) {
  for (auto r : {PromptRole::kSummarizeSmallMt, PromptRole::kSummarizeSmallChat,
                 PromptRole::kSummarizeTwoSentence, PromptRole::kTranslate, PromptRole::kJudge}) {
    EXPECT_EQ(parse_prompt_role(to_string(r)), r);
  }
  EXPECT_THROW(parse_prompt_role("nope"), ConfigError);
}

TEST(JudgeParse, ResultMarker) {
  const auto p = parse_judge_response("Feedback: concise and faithful. [RESULT] 4");
  EXPECT_EQ(p.score, 4);
  EXPECT_EQ(p.feedback, "concise and faithful.");
}

TEST(JudgeParse, NoScore) {
  const auto p = parse_judge_response("no score");
  EXPECT_FALSE(p.score);
  EXPECT_FALSE(p.error.empty());
}

TEST(JudgeParse, OutOfRangeAndFallback) {
  EXPECT_FALSE(parse_judge_response("[RESULT] 7").score);
  EXPECT_EQ(parse_judge_response("Overall I'd give it 3.").score, 3);
  EXPECT_EQ(parse_judge_response("Score 1 of 5 [RESULT] 2").score, 2);
}

}  // namespace
}  // namespace sumaug
