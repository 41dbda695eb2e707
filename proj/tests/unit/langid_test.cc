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
#include <string>

#include "oracles.h"
#include "profiles.h"
#include "sumaug/error.h"
#include "sumaug/langid.h"
#include "sumaug/records.h"

namespace sumaug {
namespace {

const LanguageIdentifier& identifier() { return testing::seed_identifier(); }

TEST(Profile, PointMass) {
  const auto p = train_profile("aaa", "aaaa aaaa aaaa");
  const auto d = p.distribution(1);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, "a");
  EXPECT_EQ(d.begin()->second, 1.0);
}

TEST(Profile, NormalizationFoldsCaseAndDropsDigits) {
  const auto p = train_profile("eng", "AB ab 12 ab!");
  EXPECT_EQ(p.count(1, "a"), 3u);
  EXPECT_EQ(p.count(1, "1"), 0u);
  EXPECT_EQ(p.count(2, " a"), 3u);
}

TEST(Profile, SerializationRoundTrip) {
  const auto p = train_profile("kat", read_file(oracle::source_dir() / "data/langid/seeds/kat.txt"));
  const std::string bytes = p.serialize();
  EXPECT_EQ(bytes.substr(0, kProfileMagic.size()), kProfileMagic);
  const auto q = LangProfile::deserialize(bytes);
  EXPECT_EQ(p, q);
  EXPECT_EQ(q.serialize(), bytes);
}

TEST(Profile, BadMagicIsDataError) {
  EXPECT_THROW(LangProfile::deserialize("NOPE\n"), DataError);
}

TEST(Profile, NoLettersIsDataError) { EXPECT_THROW(train_profile("x", "123 !!"), DataError); }

TEST(Classify, SeparatesSeedLanguages) {
  EXPECT_EQ(identifier().classify("The ministry said the new road will open next spring.").lang, "eng");
  EXPECT_EQ(identifier().classify("მთავრობამ ახალი გზის მშენებლობა დაიწყო.").lang, "kat");
  EXPECT_EQ(identifier().classify("រដ្ឋាភិបាលបានចាប់ផ្តើមសាងសង់ផ្លូវថ្មី។").lang, "khm");
}

TEST(Classify, UnknownScriptIsNotEnglish) {
  EXPECT_EQ(identifier().classify("Привет мир, как дела").lang, kUndetermined);
  EXPECT_EQ(identifier().classify("12345 !!").lang, kUndetermined);
  EXPECT_NE(identifier().classify("ᐊᐃᓐᓇᖅ ᐅᖃᐅᓯᖅ").lang, "eng");
}

TEST(Classify, MarginAndCoverageReported) {
  const auto c = identifier().classify("Officials confirmed the report on Monday.");
  EXPECT_GT(c.margin, 0.5);
  EXPECT_GT(c.coverage, 0.9);
}

TEST(EnglishProportion, Degenerate) {
  const auto eng = english_proportion("The river rose after heavy rain. Schools closed early.", identifier(), "kat");
  EXPECT_NEAR(eng.percent, 100.0, 1e-9);
  EXPECT_TRUE(eng.fully_english);
  const auto kat = english_proportion("წვიმის შემდეგ მდინარე ადიდდა. სკოლები დაიხურა.", identifier(), "kat");
  EXPECT_NEAR(kat.percent, 0.0, 1e-9);
  EXPECT_FALSE(kat.fully_english);
  EXPECT_TRUE(english_proportion("   ", identifier(), "kat").empty);
}

TEST(EnglishProportion, HalfAndHalf) {
  // Equal non-space character counts by construction (21 each).
  const std::string en = "Rain fell over the hills.";
  const std::string ka = "წვიმა მთებზე მოვიდა დღეს.";
  const auto r = english_proportion(en + " " + ka, identifier(), "kat");
  EXPECT_NEAR(r.percent, 50.0, 10.0);
  EXPECT_EQ(r.sentences, 2u);
}

TEST(EnglishProportion, RequiresEnglishProfile) {
  LanguageIdentifier only_kat({train_profile("kat", "ქართული ტექსტი")});
  EXPECT_THROW(english_proportion("x", only_kat, "kat"), ConfigError);
}

}  // namespace
}  // namespace sumaug
