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


#include "biodenoise/pubtator.h"

#include <sstream>
#include <string>

#include "biodenoise/corpus.h"
#include "biodenoise/text_util.h"
#include "gtest/gtest.h"
#include "testing/synthetic_corpus.h"

namespace biodenoise {
namespace {

constexpr char kAspirinBlock[] =
    "D1|t|Aspirin helps.\n"
    "D1|a|It is a drug.\n"
    "D1\t0\t7\tAspirin\tChemical\tMESH:D001241\n";

TEST(ParsePubtatorTest, ParsesSingleBlock) {
  const PubtatorParseResult result = ParsePubtatorString(kAspirinBlock);
  ASSERT_TRUE(result.diagnostics.empty());
  ASSERT_EQ(result.documents.size(), 1u);
  const AnnotatedDocument& doc = result.documents[0];
  EXPECT_EQ(doc.doc_id, "D1");
  EXPECT_EQ(doc.text, "Aspirin helps. It is a drug.");
  ASSERT_EQ(doc.mentions.size(), 1u);
  EXPECT_EQ(doc.mentions[0].start, 0u);
  EXPECT_EQ(doc.mentions[0].end, 7u);
  EXPECT_EQ(doc.mentions[0].entity_type, "Chemical");
  EXPECT_EQ(doc.mentions[0].norm_id, "MESH:D001241");
  EXPECT_EQ(Utf8Index(doc.text).Slice(0, 7), "Aspirin");
}

TEST(ParsePubtatorTest, BlockWithoutAnnotationsHasNoMentions) {
  const PubtatorParseResult result =
      ParsePubtatorString("D2|t|Title.\nD2|a|Body text.\n");
  ASSERT_EQ(result.documents.size(), 1u);
  EXPECT_TRUE(result.documents[0].mentions.empty());
  EXPECT_TRUE(result.diagnostics.empty());
}

TEST(ParsePubtatorTest, SurfaceMismatchIsRejectedPerLine) {
  const PubtatorParseResult result = ParsePubtatorString(
      "D1|t|Aspirin helps.\nD1|a|It is a drug.\n"
      "D1\t0\t6\tAspirn\tChemical\t\n"
      "D1\t0\t7\tAspirin\tChemical\t\n");
  ASSERT_EQ(result.documents.size(), 1u);
  EXPECT_EQ(result.documents[0].mentions.size(), 1u);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].kind, DiagnosticKind::kMalformedLine);
  EXPECT_EQ(result.diagnostics[0].line_no, 3u);
  EXPECT_EQ(result.diagnostics[0].reason, "surface mismatch");
}

TEST(ParsePubtatorTest, OffsetBeyondTextIsDiagnosed) {
  const PubtatorParseResult result = ParsePubtatorString(
      "D1|t|Short.\nD1|a|Text.\nD1\t6\t40\tText.\tChemical\t\n");
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].kind, DiagnosticKind::kOffsetOutOfBounds);
  EXPECT_EQ(result.diagnostics[0].doc_id, "D1");
}

TEST(ParsePubtatorTest, EmptyDocumentIsDiagnosed) {
  const PubtatorParseResult result = ParsePubtatorString("D3|t|\nD3|a|\n");
  EXPECT_TRUE(result.documents.empty());
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].kind, DiagnosticKind::kEmptyDocument);
}

TEST(ParsePubtatorTest, MalformedAnnotationFieldCount) {
  const PubtatorParseResult result = ParsePubtatorString(
      "D1|t|Aspirin helps.\nD1|a|It is a drug.\nD1\t0\t7\tAspirin\n");
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].kind, DiagnosticKind::kMalformedLine);
  EXPECT_EQ(result.documents.size(), 1u);
}

TEST(ParsePubtatorTest, OffsetsCountCodePoints) {
  // "β" is two bytes but one character.
  const PubtatorParseResult result = ParsePubtatorString(
      "D9|t|β-catenin binds TP53.\nD9|a|More text.\n"
      "D9\t0\t9\tβ-catenin\tGene\t1499\n"
      "D9\t16\t20\tTP53\tGene\t7157\n");
  ASSERT_TRUE(result.diagnostics.empty()) << result.diagnostics[0].ToString();
  ASSERT_EQ(result.documents[0].mentions.size(), 2u);
  EXPECT_EQ(result.documents[0].mentions[1].surface, "TP53");
}

TEST(ParsePubtatorTest, MentionsAreSorted) {
  const PubtatorParseResult result = ParsePubtatorString(
      "D1|t|Aspirin helps.\nD1|a|It is a drug.\n"
      "D1\t23\t27\tdrug\tChemical\t\n"
      "D1\t0\t7\tAspirin\tChemical\t\n");
  ASSERT_EQ(result.documents[0].mentions.size(), 2u);
  EXPECT_EQ(result.documents[0].mentions[0].start, 0u);
  EXPECT_EQ(result.documents[0].mentions[1].start, 23u);
}

TEST(ParsePubtatorTest, StreamAndStringAgree) {
  std::istringstream in(kAspirinBlock);
  absl::StatusOr<PubtatorParseResult> streamed = ParsePubtator(in);
  ASSERT_TRUE(streamed.ok());
  EXPECT_EQ(streamed->documents, ParsePubtatorString(kAspirinBlock).documents);
}

TEST(ParsePubtatorTest, RoundTripOnSyntheticCorpus) {
  const std::vector<AnnotatedDocument> docs =
      testing::MakeSyntheticCorpus({.documents = 200, .seed = 11});
  const std::string text = FormatPubtator(docs);
  const PubtatorParseResult parsed = ParsePubtatorString(text);
  ASSERT_TRUE(parsed.diagnostics.empty()) << parsed.diagnostics[0].ToString();
  EXPECT_EQ(parsed.documents, docs);
  EXPECT_EQ(FormatPubtator(parsed.documents), text);
}

TEST(ParsePubtatorTest, EveryMentionSliceMatches) {
  const std::vector<AnnotatedDocument> docs = ParsePubtatorString(
      FormatPubtator(testing::MakeSyntheticCorpus({.documents = 300, .seed = 5})))
                                                  .documents;
  for (const AnnotatedDocument& doc : docs) {
    const Utf8Index index(doc.text);
    for (const EntityMention& m : doc.mentions) {
      ASSERT_EQ(index.Slice(m.start, m.end), m.surface) << doc.doc_id;
    }
  }
}

TEST(ValidateDocumentTest, WellFormedDocumentHasNoViolations) {
  const AnnotatedDocument doc = ParsePubtatorString(kAspirinBlock).documents[0];
  EXPECT_TRUE(ValidateDocument(doc).empty());
}

TEST(ValidateDocumentTest, EndBeyondTextIsOutOfBounds) {
  AnnotatedDocument doc = ParsePubtatorString(kAspirinBlock).documents[0];
  doc.mentions[0].end = 100;
  const std::vector<Violation> violations = ValidateDocument(doc);
  ASSERT_FALSE(violations.empty());
  EXPECT_EQ(violations[0].kind, ViolationKind::kOffsetOutOfBounds);
  EXPECT_TRUE(violations[0].fatal());
}

TEST(ValidateDocumentTest, OverlapIsANonFatalWarning) {
  AnnotatedDocument doc;
  doc.doc_id = "D1";
  doc.title = "Breast cancer cells.";
  doc.body = "More.";
  doc.text = JoinTitleBody(doc.title, doc.body);
  doc.mentions = {{0, 13, "Breast cancer", "Disease", ""},
                  {0, 6, "Breast", "Anatomy", ""}};
  std::sort(doc.mentions.begin(), doc.mentions.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return std::tie(a.start, a.end) < std::tie(b.start, b.end);
            });
  const std::vector<Violation> violations = ValidateDocument(doc);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].kind, ViolationKind::kOverlapWarning);
  EXPECT_FALSE(violations[0].fatal());
  EXPECT_EQ(OverlapMask(doc), (std::vector<bool>{true, true}));
}

}  // namespace
}  // namespace biodenoise
