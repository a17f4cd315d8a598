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


#include "biodenoise/denoise_generator.h"

#include <map>
#include <set>
#include <variant>

#include "biodenoise/corruption.h"
#include "biodenoise/dataset.h"
#include "biodenoise/entity_catalog.h"
#include "biodenoise/rng.h"
#include "biodenoise/text_util.h"
#include "gtest/gtest.h"
#include "testing/synthetic_corpus.h"

namespace biodenoise {
namespace {

// "Patients were treated with Nivolumab and relapsed. Survival improved in
// melanoma." with a Chemical and a Disease mention.
AnnotatedDocument FigureDoc() {
  AnnotatedDocument doc;
  doc.doc_id = "fig1";
  doc.title = "Patients were treated with Nivolumab and relapsed.";
  doc.body = "Survival improved in melanoma after therapy with Nivolumab.";
  doc.text = JoinTitleBody(doc.title, doc.body);
  doc.mentions = {{27, 36, "Nivolumab", "Chemical", "D000077594"},
                  {72, 80, "melanoma", "Disease", "D008545"},
                  {100, 109, "Nivolumab", "Chemical", "D000077594"}};
  return doc;
}

AnnotatedDocument SingleMentionDoc(std::string id, std::string surface,
                                   std::string type) {
  AnnotatedDocument doc;
  doc.doc_id = std::move(id);
  doc.title = surface + " appears here.";
  doc.body = "Nothing else is annotated in this sentence.";
  doc.text = JoinTitleBody(doc.title, doc.body);
  doc.mentions = {{0, CharLength(surface), surface, std::move(type), ""}};
  return doc;
}

EntityCatalog CatalogOf(const std::vector<AnnotatedDocument>& docs) {
  absl::StatusOr<EntityCatalog> catalog = EntityCatalog::Build(docs);
  EXPECT_TRUE(catalog.ok()) << catalog.status();
  return *std::move(catalog);
}

GenConfig ShortConfig() {
  GenConfig config;
  config.min_context_chars = 0;
  config.seed = 17;
  return config;
}

TEST(CorruptMentionTest, FigureScenario) {
  const AnnotatedDocument doc = FigureDoc();
  absl::StatusOr<CorruptedContext> c =
      CorruptMention(doc, 0, {"Bortezomib", "D000069286", 1});
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_EQ(c->text,
            "Patients were treated with Bortezomib and relapsed. Survival "
            "improved in melanoma after therapy with Nivolumab.");
  EXPECT_EQ(c->corrupted_span, (CharSpan{27, 37}));
  EXPECT_EQ(Utf8Index(c->text).Slice(27, 37), "Bortezomib");
  EXPECT_EQ(c->original_surface, "Nivolumab");
  EXPECT_EQ(c->source_doc_id, "fig1");
}

TEST(CorruptMentionTest, EqualLengthReplacementKeepsSpan) {
  const AnnotatedDocument doc = FigureDoc();
  absl::StatusOr<CorruptedContext> c = CorruptMention(doc, 1, {"asthmaXX", "", 1});
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->corrupted_span, (CharSpan{72, 80}));
  EXPECT_EQ(c->text.size(), doc.text.size());
}

TEST(CorruptMentionTest, LaterMentionsShift) {
  const AnnotatedDocument doc = FigureDoc();
  // "melanoma" -> "glioblastoma" is 4 characters longer.
  absl::StatusOr<CorruptedContext> c = CorruptMention(doc, 1, {"glioblastoma", "", 1});
  ASSERT_TRUE(c.ok());
  const Utf8Index index(c->text);
  EXPECT_EQ(c->mentions[2].start, 104u);
  EXPECT_EQ(index.Slice(c->mentions[2].start, c->mentions[2].end), "Nivolumab");
  // Independent re-scan: the last "Nivolumab" now starts 4 characters later.
  EXPECT_EQ(c->text.rfind("Nivolumab"), doc.text.rfind("Nivolumab") + 4);
}

TEST(CorruptMentionTest, BackSubstitutionRestoresSource) {
  const AnnotatedDocument doc = FigureDoc();
  absl::StatusOr<CorruptedContext> c = CorruptMention(doc, 0, {"β-lactam", "", 1});
  ASSERT_TRUE(c.ok());
  std::u32string chars = ToUtf32(c->text);
  chars.replace(c->corrupted_span.start, c->corrupted_span.length(),
                ToUtf32(c->original_surface));
  EXPECT_EQ(ToUtf8(chars), doc.text);
}

TEST(CorruptMentionTest, Errors) {
  AnnotatedDocument doc = FigureDoc();
  EXPECT_TRUE(absl::IsOutOfRange(CorruptMention(doc, 9, {"X", "", 1}).status()));
  doc.mentions.insert(doc.mentions.begin() + 1,
                      {27, 31, "Nivo", "Chemical", ""});
  EXPECT_TRUE(absl::IsFailedPrecondition(
      CorruptMention(doc, 0, {"X", "", 1}).status()));
}

TEST(CorruptMentionsTest, ReplaceAllOccurrences) {
  const AnnotatedDocument doc = FigureDoc();
  absl::StatusOr<CorruptedContext> c = CorruptMentions(doc, {0, 2}, {"Bortezomib", "", 1});
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->text.find("Nivolumab"), std::string::npos);
  ASSERT_EQ(c->replaced_spans.size(), 2u);
  EXPECT_EQ(c->corrupted_span, c->replaced_spans[0]);
}

TEST(GenerateFactoidTest, FigureScenarioShape) {
  const AnnotatedDocument doc = FigureDoc();
  const std::vector<AnnotatedDocument> docs = {
      doc, SingleMentionDoc("other", "Bortezomib", "Chemical")};
  const EntityCatalog catalog = CatalogOf(docs);
  RngStream rng(1, "fig1/span");
  GenOutcome out = GenerateFactoidExampleAt(doc, 0, catalog, rng, ShortConfig());
  ASSERT_TRUE(std::holds_alternative<QAExample>(out));
  const QAExample& ex = std::get<QAExample>(out);
  EXPECT_EQ(ex.question, "Nivolumab");
  ASSERT_EQ(ex.answers.size(), 1u);
  EXPECT_EQ(ex.answers[0].text, "Bortezomib");
  EXPECT_EQ(ex.answers[0].answer_start, 27u);
  EXPECT_EQ(ex.question_type, QuestionType::kFactoid);
  EXPECT_EQ(ex.provenance, Provenance::kDenoise);
  EXPECT_TRUE(ValidateExample(ex).ok());
}

TEST(GenerateFactoidTest, SkipReasons) {
  AnnotatedDocument empty = SingleMentionDoc("e", "X", "Chemical");
  empty.mentions.clear();
  const std::vector<AnnotatedDocument> docs = {
      SingleMentionDoc("a", "Aspirin", "Chemical"),
      SingleMentionDoc("b", "Ibuprofen", "Chemical")};
  const EntityCatalog catalog = CatalogOf(docs);
  RngStream rng(1, "k");
  EXPECT_EQ(std::get<SkipReason>(GenerateFactoidExample(empty, catalog, rng,
                                                        ShortConfig())),
            SkipReason::kNoMentions);
  EXPECT_EQ(std::get<SkipReason>(GenerateFactoidExample(
                SingleMentionDoc("d", "Aspirin", "Chemical"),
                CatalogOf({SingleMentionDoc("d", "Aspirin", "Chemical")}), rng,
                ShortConfig())),
            SkipReason::kNoCandidate);
  GenConfig strict = ShortConfig();
  strict.min_context_chars = 10000;
  EXPECT_EQ(std::get<SkipReason>(
                GenerateFactoidExample(docs[0], catalog, rng, strict)),
            SkipReason::kContextTooShort);
}

TEST(GenerateYesNoTest, YesKeepsContext) {
  const AnnotatedDocument doc = SingleMentionDoc("y", "Aspirin", "Chemical");
  RngStream rng(3, "y/yesno");
  GenOutcome out = GenerateYesExample(doc, rng, ShortConfig());
  ASSERT_TRUE(std::holds_alternative<QAExample>(out));
  const QAExample& ex = std::get<QAExample>(out);
  EXPECT_EQ(ex.question, "Aspirin");
  EXPECT_EQ(ex.context, doc.text);
  EXPECT_EQ(ex.yesno_label, YesNo::kYes);
  EXPECT_TRUE(ex.answers.empty());
}

TEST(GenerateYesNoTest, NoUsesReplacementAsQuestion) {
  const std::vector<AnnotatedDocument> docs = {
      SingleMentionDoc("a", "Aspirin", "Chemical"),
      SingleMentionDoc("b", "Ibuprofen", "Chemical")};
  const EntityCatalog catalog = CatalogOf(docs);
  RngStream rng(3, "a/yesno");
  GenOutcome out = GenerateNoExample(docs[0], catalog, rng, ShortConfig());
  ASSERT_TRUE(std::holds_alternative<QAExample>(out));
  const QAExample& ex = std::get<QAExample>(out);
  EXPECT_EQ(ex.question, "Ibuprofen");
  EXPECT_EQ(ex.yesno_label, YesNo::kNo);
  EXPECT_EQ(ex.context.substr(0, 9), "Ibuprofen");
  EXPECT_FALSE(ContainsIgnoreCase(ex.context, "Aspirin"));
}

TEST(GenerateAdversarialTest, PairsUnrelatedContext) {
  const std::vector<AnnotatedDocument> docs = {
      SingleMentionDoc("a", "Aspirin", "Chemical"),
      SingleMentionDoc("b", "melanoma", "Disease")};
  RngStream rng(3, "a/yesno");
  GenOutcome out = GenerateAdversarialNegative(docs, 0, rng, ShortConfig());
  ASSERT_TRUE(std::holds_alternative<QAExample>(out));
  const QAExample& ex = std::get<QAExample>(out);
  EXPECT_EQ(ex.question, "Aspirin");
  EXPECT_EQ(ex.context, docs[1].text);
  EXPECT_EQ(ex.yesno_label, YesNo::kNo);
  EXPECT_EQ(ex.provenance, Provenance::kAdversarial);
}

TEST(GenerateAdversarialTest, ContextsContainingTheSurfaceAreRejected) {
  const std::vector<AnnotatedDocument> docs = {
      SingleMentionDoc("a", "Aspirin", "Chemical"),
      SingleMentionDoc("b", "ASPIRIN", "Chemical")};
  RngStream rng(3, "a/yesno");
  EXPECT_EQ(std::get<SkipReason>(
                GenerateAdversarialNegative(docs, 0, rng, ShortConfig())),
            SkipReason::kRetriesExhausted);
  const std::vector<AnnotatedDocument> one = {docs[0]};
  EXPECT_EQ(std::get<SkipReason>(
                GenerateAdversarialNegative(one, 0, rng, ShortConfig())),
            SkipReason::kTooFewDocuments);
}

TEST(GenerateCorpusTest, ByteIdenticalAcrossRunsOrderAndWorkers) {
  std::vector<AnnotatedDocument> docs =
      testing::MakeSyntheticCorpus({.documents = 120, .seed = 21});
  const EntityCatalog catalog = CatalogOf(docs);
  GenConfig config = ShortConfig();
  config.task = GenTask::kAll;
  config.max_examples_per_doc = 3;
  absl::StatusOr<GenerationResult> a = GenerateCorpus(docs, catalog, config);
  ASSERT_TRUE(a.ok()) << a.status();
  std::reverse(docs.begin(), docs.end());
  config.workers = 4;
  absl::StatusOr<GenerationResult> b = GenerateCorpus(docs, catalog, config);
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(SerializeDataset(MakeDataset(a->examples)),
            SerializeDataset(MakeDataset(b->examples)));
  config.seed = 18;
  absl::StatusOr<GenerationResult> c = GenerateCorpus(docs, catalog, config);
  EXPECT_NE(SerializeDataset(MakeDataset(a->examples)),
            SerializeDataset(MakeDataset(c->examples)));
}

TEST(GenerateCorpusTest, YesNoRatioIsExact) {
  const std::vector<AnnotatedDocument> docs =
      testing::MakeSyntheticCorpus({.documents = 1500, .seed = 8});
  const EntityCatalog catalog = CatalogOf(docs);
  GenConfig config = ShortConfig();
  config.task = GenTask::kYesNo;
  config.max_examples_per_doc = 6;
  absl::StatusOr<GenerationResult> result = GenerateCorpus(docs, catalog, config);
  ASSERT_TRUE(result.ok());
  ASSERT_EQ(result->examples.size(), 9000u);
  std::map<std::string, int> kinds;
  for (const QAExample& ex : result->examples) {
    ++kinds[ex.meta["kind"].get<std::string>()];
  }
  EXPECT_EQ(kinds["yes"], 3000);
  EXPECT_EQ(kinds["no"], 3000);
  EXPECT_EQ(kinds["adversarial"], 3000);
}

TEST(GenerateCorpusTest, SummaryCountsSkips) {
  std::vector<AnnotatedDocument> docs =
      testing::MakeSyntheticCorpus({.documents = 5, .seed = 1});
  AnnotatedDocument bare = SingleMentionDoc("zz-empty", "X", "Chemical");
  bare.mentions.clear();
  docs.push_back(bare);
  const EntityCatalog catalog = CatalogOf(docs);
  absl::StatusOr<GenerationResult> result =
      GenerateCorpus(docs, catalog, ShortConfig());
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->summary.generated, 5u);
  EXPECT_EQ(result->summary.skipped.at("NoMentions"), 1u);
  const nlohmann::json summary = result->summary.ToJson();
  EXPECT_EQ(summary["generated"], 5);
  EXPECT_EQ(summary["skipped"]["NoMentions"], 1);
}

TEST(GenerateCorpusTest, DuplicateDocIdsAreRejected) {
  const AnnotatedDocument doc = SingleMentionDoc("a", "Aspirin", "Chemical");
  const std::vector<AnnotatedDocument> docs = {doc, doc};
  EXPECT_FALSE(GenerateCorpus(docs, CatalogOf(docs), ShortConfig()).ok());
}

TEST(GenConfigTest, ValidationAndRatioParsing) {
  GenConfig config;
  EXPECT_TRUE(config.Validate().ok());
  config.max_examples_per_doc = 0;
  EXPECT_FALSE(config.Validate().ok());
  absl::StatusOr<YesNoRatio> ratio = ParseYesNoRatio("2:1:1");
  ASSERT_TRUE(ratio.ok());
  EXPECT_EQ(ratio->yes, 2u);
  EXPECT_FALSE(ParseYesNoRatio("1:1").ok());
  EXPECT_FALSE(ParseYesNoRatio("a:b:c").ok());
  EXPECT_FALSE(GenConfig().ToJson().contains("workers"));
}

}  // namespace
}  // namespace biodenoise
