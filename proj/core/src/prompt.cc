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

#include "sumaug/prompt.h"

#include <algorithm>
#include <cctype>

#include "sumaug/error.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

// Prometheus-style absolute grading layout, reference-free.
constexpr std::string_view kJudgeBody =
    "###Task Description:\n"
    "An instruction (might include an Input inside it), a response to evaluate, and a score "
    "rubric representing a evaluation criteria are given.\n"
    "1. Write a detailed feedback that assess the quality of the response strictly based on the "
    "given score rubric, not evaluating in general.\n"
    "2. After writing a feedback, write a score that is an integer between 1 and 5. You should "
    "refer to the score rubric.\n"
    "3. The output format should look as follows: \"Feedback: (write a feedback for criteria) "
    "[RESULT] (an integer number between 1 and 5)\"\n"
    "4. Please do not generate any other opening, closing, and explanations.\n"
    "\n"
    "###The instruction to evaluate:\n"
    "<<INSTRUCTION>>\n"
    "\n"
    "###Response to evaluate:\n"
    "<<RESPONSE>>\n"
    "\n"
    "###Score Rubrics:\n"
    "[<<CRITERIA>>]\n"
    "Score 1: <<SCORE1>>\n"
    "Score 2: <<SCORE2>>\n"
    "Score 3: <<SCORE3>>\n"
    "Score 4: <<SCORE4>>\n"
    "Score 5: <<SCORE5>>\n"
    "\n"
    "###Feedback: ";

constexpr std::string_view kJudgeWithReferenceBody =
    "###Task Description:\n"
    "An instruction (might include an Input inside it), a response to evaluate, a reference "
    "answer that gets a score of 5, and a score rubric representing a evaluation criteria are "
    "given.\n"
    "1. Write a detailed feedback that assess the quality of the response strictly based on the "
    "given score rubric, not evaluating in general.\n"
    "2. After writing a feedback, write a score that is an integer between 1 and 5. You should "
    "refer to the score rubric.\n"
    "3. The output format should look as follows: \"Feedback: (write a feedback for criteria) "
    "[RESULT] (an integer number between 1 and 5)\"\n"
    "4. Please do not generate any other opening, closing, and explanations.\n"
    "\n"
    "###The instruction to evaluate:\n"
    "<<INSTRUCTION>>\n"
    "\n"
    "###Response to evaluate:\n"
    "<<RESPONSE>>\n"
    "\n"
    "###Reference Answer (Score 5):\n"
    "<<REFERENCE>>\n"
    "\n"
    "###Score Rubrics:\n"
    "[<<CRITERIA>>]\n"
    "Score 1: <<SCORE1>>\n"
    "Score 2: <<SCORE2>>\n"
    "Score 3: <<SCORE3>>\n"
    "Score 4: <<SCORE4>>\n"
    "Score 5: <<SCORE5>>\n"
    "\n"
    "###Feedback: ";

const std::array<PromptTemplate, 5>& templates() {
  static const std::array<PromptTemplate, 5> kTemplates = {
      PromptTemplate{"summarize_small_mt", PromptRole::kSummarizeSmallMt,
                     "Write a summary for the following article in <<LANGUAGE>>. \n <<ARTICLE_TEXT>>"},
      PromptTemplate{"summarize_small_chat", PromptRole::kSummarizeSmallChat,
                     "Write a summary for the following article in <<LANGUAGE>>. Write the summary "
                     "in <<LANGUAGE>>. \n"
                     "Do not provide a translation or explain anything.\n"
                     "Only provide the summary, do not provide any other information except for "
                     "the summary in <<LANGUAGE>>. \n"
                     "Summarize this article:\n"
                     "<<ARTICLE_TEXT>>\n"},
      PromptTemplate{"summarize_two_sentence", PromptRole::kSummarizeTwoSentence,
                     "Summarize the following article using only 2 sentences: <<ARTICLE_TEXT>>"},
      PromptTemplate{"translate", PromptRole::kTranslate,
                     "Translate the following text into <<LANG>>:  <<ARTICLE_TEXT>>"},
      PromptTemplate{"judge_absolute", PromptRole::kJudge, std::string(kJudgeBody)},
  };
  return kTemplates;
}

bool is_placeholder_char(char c) {
  return std::isupper(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '_';
}

// Length of a placeholder starting at `pos` ("<<NAME>>"), or 0.
std::size_t placeholder_at(std::string_view body, std::size_t pos) {
  if (body.compare(pos, 2, "<<") != 0) return 0;
  std::size_t i = pos + 2;
  while (i < body.size() && is_placeholder_char(body[i])) ++i;
  if (i == pos + 2 || body.compare(i, 2, ">>") != 0) return 0;
  return i + 2 - pos;
}

}  // namespace

std::string_view to_string(PromptRole role) {
  switch (role) {
    case PromptRole::kSummarizeSmallMt: return "summarize_small_mt";
    case PromptRole::kSummarizeSmallChat: return "summarize_small_chat";
    case PromptRole::kSummarizeTwoSentence: return "summarize_two_sentence";
    case PromptRole::kTranslate: return "translate";
    case PromptRole::kJudge: return "judge";
  }
  return "judge";
}

PromptRole parse_prompt_role(std::string_view name) {
  for (auto role : {PromptRole::kSummarizeSmallMt, PromptRole::kSummarizeSmallChat,
                    PromptRole::kSummarizeTwoSentence, PromptRole::kTranslate, PromptRole::kJudge}) {
    if (to_string(role) == name) return role;
  }
  throw ConfigError("unknown prompt template `" + std::string(name) + "`");
}

const PromptTemplate& builtin_template(PromptRole role) {
  for (const auto& t : templates()) {
    if (t.role == role) return t;
  }
  throw ConfigError("no built-in template for role");
}

const PromptTemplate& judge_with_reference_template() {
  static const PromptTemplate kTemplate{"judge_absolute_ref", PromptRole::kJudge,
                                        std::string(kJudgeWithReferenceBody)};
  return kTemplate;
}

std::vector<std::string> placeholders(std::string_view body) {
  std::vector<std::string> out;
  for (std::size_t pos = 0; pos < body.size();) {
    const std::size_t len = placeholder_at(body, pos);
    if (len == 0) {
      ++pos;
      continue;
    }
    std::string name(body.substr(pos + 2, len - 4));
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    pos += len;
  }
  return out;
}

std::string render_prompt(const PromptTemplate& tmpl, const Bindings& bindings) {
  const std::string_view body = tmpl.body;
  std::string out;
  out.reserve(body.size());
  for (std::size_t pos = 0; pos < body.size();) {
    const std::size_t len = placeholder_at(body, pos);
    if (len == 0) {
      out.push_back(body[pos++]);
      continue;
    }
    const std::string name(body.substr(pos + 2, len - 4));
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      throw ConfigError("template `" + tmpl.id + "`: unbound placeholder <<" + name + ">>");
    }
    out += it->second;
    pos += len;
  }
  return out;
}

const JudgeRubric& JudgeRubric::summary_quality() {
  static const JudgeRubric kRubric{
      "Does the model provide a summary of the input article text that has decent semantic "
      "coverage, factuality, is consistent with the original article, is informative, coherent, "
      "fluent, concise and written in the language the article is written in?",
      {
          "The model neglects to provide a summary or the summary is not in the intended language.",
          "The model provides a response but it is not a good summary. The response is factually "
          "inaccurate, not very informative, or not very fluent.",
          "The model provides a summary but it is lacking in some of the desired qualities of a "
          "good summary.",
          "The model provides a reasonable summary of the input text that includes most of the "
          "desired qualities of a good summary.",
          "The model provides an excellent summary that meets all of the requested criteria of a "
          "good summary.",
      }};
  return kRubric;
}

Bindings judge_bindings(const JudgeRubric& rubric, std::string_view instruction,
                        std::string_view response) {
  Bindings b;
  b["INSTRUCTION"] = instruction;
  b["RESPONSE"] = response;
  b["CRITERIA"] = rubric.criteria;
  for (std::size_t i = 0; i < rubric.score_descriptions.size(); ++i) {
    if (rubric.score_descriptions[i].empty()) {
      throw ConfigError("judge rubric is missing the score " + std::to_string(i + 1) + " description");
    }
    b["SCORE" + std::to_string(i + 1)] = rubric.score_descriptions[i];
  }
  return b;
}

JudgeParse parse_judge_response(std::string_view response, const JudgeParseOptions& options) {
  JudgeParse out;
  std::string_view tail = response;
  std::string_view feedback = response;
  if (!options.marker.empty()) {
    const std::size_t at = response.rfind(options.marker);
    if (at != std::string_view::npos) {
      tail = response.substr(at + options.marker.size());
      feedback = response.substr(0, at);
    }
  }
  constexpr std::string_view kFeedbackPrefix = "Feedback:";
  feedback = unicode::trim(feedback);
  if (feedback.substr(0, kFeedbackPrefix.size()) == kFeedbackPrefix) {
    feedback = unicode::trim(feedback.substr(kFeedbackPrefix.size()));
  }
  out.feedback = std::string(feedback);

  // Last run of ASCII digits not glued to a letter, digit, '.' or '-'.
  std::optional<long> last;
  for (std::size_t i = 0; i < tail.size();) {
    if (!std::isdigit(static_cast<unsigned char>(tail[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < tail.size() && std::isdigit(static_cast<unsigned char>(tail[j]))) ++j;
    auto glued = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
    };
    const bool left_ok = i == 0 || !glued(tail[i - 1]);
    const bool right_ok = j == tail.size() || !glued(tail[j]) ||
                          (tail[j] == '.' && (j + 1 == tail.size() ||
                                              !std::isdigit(static_cast<unsigned char>(tail[j + 1]))));
    if (left_ok && right_ok && j - i <= 9) last = std::stol(std::string(tail.substr(i, j - i)));
    i = j;
  }
  if (!last) {
    out.error = "no score found in judge response";
  } else if (*last < options.min_score || *last > options.max_score) {
    out.error = "judge score " + std::to_string(*last) + " outside [" +
                std::to_string(options.min_score) + ", " + std::to_string(options.max_score) + "]";
  } else {
    out.score = static_cast<int>(*last);
  }
  return out;
}

}  // namespace sumaug
