// Copyright 2026 The biodenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "biodenoise/sentence_splitter.h"

#include <string>

#include "biodenoise/text_util.h"
#include "gtest/gtest.h"
#include "testing/synthetic_corpus.h"

namespace biodenoise {
namespace {

std::vector<std::string> Texts(std::string_view text) {
  const Utf8Index index(text);
  std::vector<std::string> out;
  for (const SentenceSpan& s : SplitSentences(text)) {
    out.emplace_back(index.Slice(s.start, s.end));
  }
  return out;
}

TEST(SplitSentencesTest, TwoShortSentences) {
  EXPECT_EQ(Texts("A. B."), (std::vector<std::string>{"A.", "B."}));
}

TEST(SplitSentencesTest, EmptyText) { EXPECT_TRUE(SplitSentences("").empty()); }

TEST(SplitSentencesTest, NoTerminalPunctuation) {
  const std::vector<SentenceSpan> spans = SplitSentences("No terminal punctuation");
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].start, 0u);
  EXPECT_EQ(spans[0].end, 23u);
}

TEST(SplitSentencesTest, LowercaseContinuationDoesNotSplit) {
  EXPECT_EQ(Texts("Dose was 5 mg. daily for a week."),
            (std::vector<std::string>{"Dose was 5 mg. daily for a week."}));
}

TEST(SplitSentencesTest, AbbreviationsDoNotSplit) {
  EXPECT_EQ(Texts("Smith et al. Reported this. See Fig. 2 for details."),
            (std::vector<std::string>{"Smith et al. Reported this.",
                                      "See Fig. 2 for details."}));
  EXPECT_EQ(Texts("Drugs (e.g. Aspirin) help. Yes."),
            (std::vector<std::string>{"Drugs (e.g. Aspirin) help.", "Yes."}));
}

TEST(SplitSentencesTest, ClosersStayWithTheSentence) {
  EXPECT_EQ(Texts("He said \"stop.\" Then left."),
            (std::vector<std::string>{"He said \"stop.\"", "Then left."}));
}

TEST(SplitSentencesTest, DigitStartsASentence) {
  EXPECT_EQ(Texts("Results were clear! 42 patients improved?"),
            (std::vector<std::string>{"Results were clear!",
                                      "42 patients improved?"}));
}

TEST(SplitSentencesTest, OffsetsAreCodePoints) {
  const std::vector<SentenceSpan> spans = SplitSentences("β is Greek. Γ too.");
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[1].start, 12u);
  EXPECT_EQ(spans[1].end, 18u);
}

TEST(SplitSentencesTest, CoverageAndIdempotenceOnSyntheticText) {
  for (const AnnotatedDocument& doc :
       testing::MakeSyntheticCorpus({.documents = 100, .seed = 3})) {
    const std::u32string chars = ToUtf32(doc.text);
    const std::vector<SentenceSpan> spans = SplitSentences(doc.text);
    ASSERT_GE(spans.size(), 2u);
    std::vector<int> owner(chars.size(), -1);
    size_t previous_end = 0;
    for (size_t i = 0; i < spans.size(); ++i) {
      ASSERT_LT(spans[i].start, spans[i].end);
      ASSERT_GE(spans[i].start, previous_end);
      previous_end = spans[i].end;
      for (size_t c = spans[i].start; c < spans[i].end; ++c) owner[c] = i;
      // Re-splitting a returned sentence yields that sentence alone.
      const std::string sentence =
          ToUtf8(std::u32string_view(chars).substr(spans[i].start,
                                                   spans[i].end - spans[i].start));
      const std::vector<SentenceSpan> again = SplitSentences(sentence);
      ASSERT_EQ(again.size(), 1u) << sentence;
      EXPECT_EQ(again[0].end - again[0].start, spans[i].end - spans[i].start);
    }
    for (size_t c = 0; c < chars.size(); ++c) {
      if (!IsSpaceChar(chars[c])) ASSERT_GE(owner[c], 0) << doc.doc_id << " " << c;
    }
  }
}

TEST(SentenceContainingTest, FindsEnclosingSentence) {
  const std::vector<SentenceSpan> spans = SplitSentences("A b c. D e f.");
  EXPECT_EQ(SentenceContaining(spans, 7, 10), 1u);
  EXPECT_EQ(SentenceContaining(spans, 0, 1), 0u);
  EXPECT_FALSE(SentenceContaining(spans, 4, 8).has_value());
}

}  // namespace
}  // namespace biodenoise
