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

#ifndef SUMAUG_LANGID_H_
#define SUMAUG_LANGID_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sumaug {

inline constexpr int kMaxNgramOrder = 3;
inline constexpr std::string_view kUndetermined = "und";
inline constexpr std::string_view kProfileMagic = "LPRO1";

// Character n-gram statistics (orders 1..3) for one language.
//
// Text is normalized before counting: letters and marks are case folded,
// everything else (digits, punctuation, symbols, whitespace) becomes a word
// break. Unigrams count letters only; bigrams and trigrams run over each
// word padded with one space on either side.
class LangProfile {
 public:
  LangProfile() = default;
  LangProfile(std::string lang, std::array<std::map<std::string, std::uint64_t>, kMaxNgramOrder> counts,
              std::uint64_t training_chars);

  const std::string& lang() const { return lang_; }
  std::uint64_t training_chars() const { return training_chars_; }
  std::uint64_t total(int order) const { return totals_[order - 1]; }
  std::size_t distinct(int order) const { return counts_[order - 1].size(); }
  std::uint64_t count(int order, const std::string& gram) const;
  bool seen(int order, const std::string& gram) const { return count(order, gram) > 0; }

  // Add-one smoothed log probability: ln((c + 1) / (N + V + 1)).
  double log_prob(int order, const std::string& gram) const;

  // Maximum-likelihood distribution of one order (sums to 1).
  std::map<std::string, double> distribution(int order) const;

  std::string serialize() const;
  static LangProfile deserialize(std::string_view data);

  void save(const std::filesystem::path& path) const;
  static LangProfile load(const std::filesystem::path& path);

  bool operator==(const LangProfile&) const = default;

 private:
  std::string lang_;
  std::array<std::map<std::string, std::uint64_t>, kMaxNgramOrder> counts_;
  std::array<std::uint64_t, kMaxNgramOrder> totals_{};
  std::uint64_t training_chars_ = 0;
};

// Normalized words of `text` (see LangProfile).
std::vector<std::u32string> langid_words(std::string_view text);

// Throws DataError for text without any letters; warns below 1000 characters.
LangProfile train_profile(std::string lang, std::string_view seed_text);

struct Classification {
  std::string lang{kUndetermined};
  std::string runner_up{kUndetermined};
  double score = 0.0;
  double margin = 0.0;    // best minus second-best log score
  double coverage = 0.0;  // share of letters the winning profile has seen
};

struct ClassifierOptions {
  double min_margin = 0.5;    // nats; below this the answer is "und"
  double min_coverage = 0.5;  // below this share of known letters: "und"
};

// Naive-Bayes style scorer over a fixed set of profiles. N-grams unseen by
// every profile carry no evidence and are skipped.
class LanguageIdentifier {
 public:
  explicit LanguageIdentifier(std::vector<LangProfile> profiles, ClassifierOptions options = {});

  // Loads every `*.lpro` file in a directory.
  static LanguageIdentifier from_directory(const std::filesystem::path& dir,
                                           ClassifierOptions options = {});

  Classification classify(std::string_view text) const;
  bool has(std::string_view lang) const;
  const std::vector<LangProfile>& profiles() const { return profiles_; }

 private:
  std::vector<LangProfile> profiles_;
  ClassifierOptions options_;
};

struct EnglishProportion {
  double percent = 0.0;         // eng-classified characters / all characters
  bool fully_english = false;   // every sentence classified eng
  bool empty = false;           // no non-whitespace characters
  std::size_t sentences = 0;
};

// Splits the summary with the target language's sentence rules, classifies
// each sentence and weights by non-whitespace character count. Requires an
// `eng` profile.
EnglishProportion english_proportion(std::string_view summary, const LanguageIdentifier& id,
                                     std::string_view target_lang);

}  // namespace sumaug

#endif  // SUMAUG_LANGID_H_
