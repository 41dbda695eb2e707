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

#ifndef SUMAUG_PROMPT_H_
#define SUMAUG_PROMPT_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumaug {

enum class PromptRole {
  kSummarizeSmallMt,      // short instruction used for the mT0-style model
  kSummarizeSmallChat,    // long instruction for chat models, forbids translation
  kSummarizeTwoSentence,  // "using only 2 sentences"
  kTranslate,
  kJudge,
};

std::string_view to_string(PromptRole role);
PromptRole parse_prompt_role(std::string_view name);

struct PromptTemplate {
  std::string id;
  PromptRole role;
  std::string body;  // placeholders look like <<NAME>>
};

// Built-in templates. Bodies are the exact strings used in the original
// experiments; they must not be reformatted.
const PromptTemplate& builtin_template(PromptRole role);

// Placeholder names (without the angle brackets) in order of appearance,
// duplicates removed.
std::vector<std::string> placeholders(std::string_view body);

using Bindings = std::map<std::string, std::string>;

// Substitutes every placeholder in one left-to-right pass; substituted text
// is never rescanned. Throws ConfigError naming the first unbound placeholder.
std::string render_prompt(const PromptTemplate& tmpl, const Bindings& bindings);

struct JudgeRubric {
  std::string criteria;
  std::array<std::string, 5> score_descriptions;  // score 1 .. score 5

  // Rubric for summary quality in the article's own language.
  static const JudgeRubric& summary_quality();
};

// Bindings that fill the judge template: INSTRUCTION, RESPONSE, CRITERIA,
// SCORE1..SCORE5 and, when a reference is given, REFERENCE.
Bindings judge_bindings(const JudgeRubric& rubric, std::string_view instruction,
                        std::string_view response);

// Judge template variant that also shows a reference answer.
const PromptTemplate& judge_with_reference_template();

struct JudgeParseOptions {
  std::string marker = "[RESULT]";  // searched first; the score follows it
  int min_score = 1;
  int max_score = 5;
};

struct JudgeParse {
  std::optional<int> score;
  std::string feedback;  // response text before the marker, trimmed
  std::string error;     // set when no valid score was found
};

// The score is the last standalone integer after the last marker, or in the
// whole response when there is no marker.
JudgeParse parse_judge_response(std::string_view response, const JudgeParseOptions& options = {});

}  // namespace sumaug

#endif  // SUMAUG_PROMPT_H_
