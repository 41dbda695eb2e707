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

#include "sumaug/corpus.h"
#include "sumaug/records.h"
#include "sumaug/segment.h"

namespace sumaug {
namespace {

std::string doc(std::size_t sentences) {
  std::string text;
  for (std::size_t i = 0; i < sentences; ++i) text += "Sentence number " + std::to_string(i) + " is here. ";
  return text;
}

TEST(RecordReader, PreservesFileOrder) {
  std::istringstream in(R"({"id":"a","lang":"eng","text":"One."}
{"id":"b","lang":"eng","text":"Two."}
{"id":"c","lang":"kat","text":"სამი."}
)");
  RecordReader reader(in, Schema::kArticles, "mem");
  ArticleRecord r;
  std::vector<std::string> ids;
  while (reader.next(r)) ids.push_back(r.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(reader.errors().empty());
}

TEST(RecordReader, MissingTextNamesLineAndContinues) {
  std::istringstream in(R"({"id":"a","lang":"eng","text":"One."}
{"id":"b","lang":"eng"}
{"id":"c","lang":"eng","text":"Three."}
)");
  RecordReader reader(in, Schema::kArticles, "mem");
  ArticleRecord r;
  std::vector<std::string> ids;
  while (reader.next(r)) ids.push_back(r.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "c"}));
  ASSERT_EQ(reader.errors().size(), 1u);
  EXPECT_EQ(reader.errors()[0].line, 2u);
  EXPECT_NE(reader.errors()[0].message.find("text"), std::string::npos);
}

TEST(RecordReader, EmptyStream) {
  std::istringstream in("");
  RecordReader reader(in, Schema::kArticles, "mem");
  ArticleRecord r;
  EXPECT_FALSE(reader.next(r));
  EXPECT_TRUE(reader.errors().empty());
  MinSentenceFilter filter;
  EXPECT_EQ(filter.totals().n_docs, 0u);
}

TEST(RecordReader, MissingIdIsSynthesized) {
  std::istringstream in(R"({"lang":"eng","text":"One."})");
  RecordReader reader(in, Schema::kArticles, "toy");
  ArticleRecord r;
  ASSERT_TRUE(reader.next(r));
  EXPECT_EQ(r.id, "toy:1");
}

TEST(Records, CanonicalLineRoundTrips) {
  const auto a = make_article("x1", "eng", "First one. Second \"quoted\" one.", "Title");
  const std::string line = to_json_line(a);
  std::istringstream in(line + "\n");
  RecordReader reader(in, Schema::kArticles, "mem");
  ArticleRecord b;
  ASSERT_TRUE(reader.next(b));
  EXPECT_EQ(to_json_line(b), line);
  EXPECT_EQ(a, b);
}

TEST(Records, PairSummaryStringIsSegmented) {
  std::istringstream in(
      R"({"id":"p","lang":"eng","text":"A b. C d.","summary":"One here. Two here.","provenance":"real"})");
  RecordReader reader(in, Schema::kPairs, "mem");
  TrainPair p;
  ASSERT_TRUE(reader.next(p));
  EXPECT_EQ(p.summary, (std::vector<std::string>{"One here.", "Two here."}));
  EXPECT_EQ(p.summary_text(), "One here. Two here.");
}

TEST(Segment, TerminatorRule) {
  EXPECT_EQ(segment_sentences("A. B. C.", "eng").size(), 3u);
}

TEST(Segment, NoTerminatorsGivesTrimmedInput) {
  EXPECT_EQ(segment_sentences("  no end mark here  ", "eng"),
            (std::vector<std::string>{"no end mark here"}));
}

TEST(Segment, KhmerKhan) {
  // Five sentences, hand-annotated at each KHAN.
  const std::string text =
      "ព្រះអាទិត្យរះ។ កុមារទៅសាលា។ ផ្សារបើកពេលព្រឹក។ ភ្លៀងធ្លាក់ខ្លាំង។ ទន្លេឡើងខ្ពស់។";
  const auto s = segment_sentences(text, "khm");
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(s[0], "ព្រះអាទិត្យរះ។");
  EXPECT_EQ(s[4], "ទន្លេឡើងខ្ពស់។");
}

TEST(Segment, KhanWithoutSpaceStillSplits) {
  EXPECT_EQ(segment_sentences("ក។ខ។", "khm").size(), 2u);
}

TEST(Segment, DecimalAndInitialsDoNotSplit) {
  EXPECT_EQ(segment_sentences("It cost 3.5 dollars. J. Smith paid.", "eng"),
            (std::vector<std::string>{"It cost 3.5 dollars.", "J. Smith paid."}));
}

TEST(Segment, ClosingQuoteStaysWithSentence) {
  EXPECT_EQ(segment_sentences("He said \"stop.\" Then left.", "eng"),
            (std::vector<std::string>{"He said \"stop.\"", "Then left."}));
}

TEST(Segment, LineBreakEndsSentence) {
  EXPECT_EQ(segment_sentences("Heading\nBody text.", "eng").size(), 2u);
}

TEST(Segment, SpansPointIntoText) {
  const std::string text = "One. Two!  Three?";
  SentenceSegmenter seg("eng");
  for (const auto& sp : seg.spans(text)) {
    EXPECT_LT(sp.begin, sp.end);
    EXPECT_LE(sp.end, text.size());
  }
  EXPECT_EQ(seg.split(text), (std::vector<std::string>{"One.", "Two!", "Three?"}));
}

TEST(Filter, FewerThanFiveIsDropped) {
  auto r = filter_min_sentences({make_article("a", "eng", doc(4)), make_article("b", "eng", doc(5))});
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.kept[0].id, "b");
}

TEST(Filter, Counting) {
  std::vector<ArticleRecord> in;
  for (int i = 0; i < 10; ++i) in.push_back(make_article(std::to_string(i), "eng", doc(i < 3 ? 2 : 6)));
  const auto r = filter_min_sentences(in);
  EXPECT_EQ(r.stats.at("eng").n_docs, 10u);
  EXPECT_EQ(r.stats.at("eng").n_kept, 7u);
  EXPECT_EQ(r.stats.at("eng").sentence_histogram.at(2), 3u);
}

TEST(Filter, TitleIsNotCounted) {
  auto r = filter_min_sentences({make_article("a", "eng", doc(4), "A title.")});
  EXPECT_TRUE(r.kept.empty());
}

TEST(Filter, StatsCsv) {
  const auto r = filter_min_sentences({make_article("a", "eng", doc(4)), make_article("b", "kat", doc(5))});
  EXPECT_EQ(stats_csv(r.stats, 5),
            "lang,n_docs,n_kept,min_sentences,histogram\n"
            "eng,1,0,5,4:1\n"
            "kat,1,1,5,5:1\n");
}

TEST(Filter, DefaultIsFive) { EXPECT_EQ(kDefaultMinSentences, 5u); }

}  // namespace
}  // namespace sumaug
