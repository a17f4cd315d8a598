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


#include "biodenoise/evaluation.h"

#include "biodenoise/decoding.h"
#include "gtest/gtest.h"

namespace biodenoise {
namespace {

QAExample Factoid(std::string id, std::string answer, std::string context) {
  QAExample ex;
  ex.id = std::move(id);
  ex.question = "q";
  ex.context = std::move(context);
  ex.answers = {{answer, ex.context.find(answer)}};
  return ex;
}

QAExample ListExample(std::string id, std::string qid, std::string context,
                      std::vector<std::string> answers) {
  QAExample ex;
  ex.id = std::move(id);
  ex.question_type = QuestionType::kList;
  ex.question = "q";
  ex.context = std::move(context);
  for (const std::string& a : answers) ex.answers.push_back({a, ex.context.find(a)});
  ex.meta = {{"question_id", qid}};
  return ex;
}

QAExample YesNoEx(std::string id, YesNo label) {
  QAExample ex;
  ex.id = std::move(id);
  ex.question_type = QuestionType::kYesNo;
  ex.question = "q";
  ex.context = "c";
  ex.yesno_label = label;
  return ex;
}

DecodedQuestion Pred(std::string qid, QuestionType type,
                     std::vector<std::string> answers) {
  DecodedQuestion q;
  q.question_id = std::move(qid);
  q.question_type = type;
  for (std::string& a : answers) q.answers.push_back({std::move(a), 0, 0});
  return q;
}

DatasetFile Mixed() {
  return MakeDataset({Factoid("f1", "TP53", "TP53 is a gene."),
                      Factoid("f2", "BRCA1", "BRCA1 too."),
                      ListExample("l1a", "L", "A and B.", {"A", "B"}),
                      ListExample("l1b", "L", "C alone.", {"C"}),
                      YesNoEx("y1", YesNo::kYes), YesNoEx("y2", YesNo::kNo)});
}

DecodedFile MixedDecoded() {
  DecodedFile d;
  d.questions = {Pred("L", QuestionType::kList, {"A", "C", "D"}),
                 Pred("f1", QuestionType::kFactoid, {"gene", "tp53"}),
                 Pred("f2", QuestionType::kFactoid, {"x"}),
                 Pred("y1", QuestionType::kYesNo, {}),
                 Pred("y2", QuestionType::kYesNo, {})};
  d.questions[3].label = YesNo::kYes;
  d.questions[4].label = YesNo::kYes;
  return d;
}

TEST(EvaluateTest, EmptyDatasetScoresZero) {
  absl::StatusOr<EvaluationReport> r = Evaluate(MakeDataset({}), DecodedFile{});
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->factoid.n, 0u);
  EXPECT_EQ(r->list.n, 0u);
  EXPECT_EQ(r->yesno.n, 0u);
  EXPECT_TRUE(r->flags.empty());
}

TEST(EvaluateTest, MixedTypes) {
  absl::StatusOr<EvaluationReport> r = Evaluate(Mixed(), MixedDecoded());
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->factoid.n, 2u);
  EXPECT_DOUBLE_EQ(r->factoid.sacc, 0);
  EXPECT_DOUBLE_EQ(r->factoid.lacc, 0.5);
  EXPECT_DOUBLE_EQ(r->factoid.mrr, 0.25);
  EXPECT_EQ(r->list.n, 1u);
  EXPECT_NEAR(r->list.macro_precision, 2.0 / 3, 1e-12);
  EXPECT_NEAR(r->list.macro_recall, 2.0 / 3, 1e-12);
  EXPECT_EQ(r->yesno.n, 2u);
  EXPECT_DOUBLE_EQ(r->yesno.acc, 0.5);
  ASSERT_EQ(r->rows.size(), 5u);
  EXPECT_EQ(r->rows[0].question_id, "L");
}

TEST(EvaluateTest, MissingPredictionsAreWrongAndFlagged) {
  DecodedFile d = MixedDecoded();
  d.questions.pop_back();  // y2
  d.questions.erase(d.questions.begin() + 1);  // f1
  absl::StatusOr<EvaluationReport> r = Evaluate(Mixed(), d);
  ASSERT_TRUE(r.ok());
  EXPECT_DOUBLE_EQ(r->factoid.lacc, 0);
  EXPECT_DOUBLE_EQ(r->yesno.acc, 0.5);
  EXPECT_NE(std::find(r->flags.begin(), r->flags.end(), "MissingPrediction(y2)"),
            r->flags.end());
  EXPECT_NE(std::find(r->flags.begin(), r->flags.end(), "MissingPrediction(f1)"),
            r->flags.end());
}

TEST(EvaluateTest, IdMismatch) {
  DecodedFile d = MixedDecoded();
  d.questions.push_back(Pred("zzz", QuestionType::kFactoid, {}));
  EXPECT_FALSE(Evaluate(Mixed(), d).ok());
  d = MixedDecoded();
  d.questions[1].question_type = QuestionType::kList;
  absl::Status s = Evaluate(Mixed(), d).status();
  EXPECT_NE(std::string(s.message()).find("IdMismatch"), std::string::npos);
}

TEST(EvaluateTest, AbsentClassFlag) {
  DecodedFile d;
  d.questions = {Pred("y1", QuestionType::kYesNo, {})};
  d.questions[0].label = YesNo::kYes;
  absl::StatusOr<EvaluationReport> r =
      Evaluate(MakeDataset({YesNoEx("y1", YesNo::kYes)}), d);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->flags, std::vector<std::string>{"AbsentClass(no)"});
}

TEST(EvaluateTest, QuestionsWithoutGoldAreSkipped) {
  QAExample ex = YesNoEx("y9", YesNo::kYes);
  ex.yesno_label.reset();
  ex.meta = {{"has_gold", false}};
  absl::StatusOr<EvaluationReport> r = Evaluate(MakeDataset({ex}), DecodedFile{});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->questions_without_gold, 1u);
  EXPECT_EQ(r->yesno.n, 0u);
}

TEST(ReportTest, JsonRoundTrip) {
  absl::StatusOr<EvaluationReport> r = Evaluate(Mixed(), MixedDecoded());
  ASSERT_TRUE(r.ok());
  r->run = {{"tool", "biodenoise"}};
  absl::StatusOr<EvaluationReport> back = EvaluationReport::FromJson(r->ToJson());
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, *r);
  EXPECT_EQ(SerializeReport(*back), SerializeReport(*r));
  const std::string text = r->ToText();
  EXPECT_NE(text.find("Ranking:"), std::string::npos);
}

TEST(DecodeDatasetTest, GroupsContextsAndRoundTrips) {
  const DatasetFile ds = Mixed();
  PredictionFile p;
  SpanPredictionRecord a{"l1a", {{"A", 0, 1, 3, 3}, {"and", 2, 5, 0, 0}, {"B", 6, 7, 2, 2}}};
  SpanPredictionRecord b{"l1b", {{"C", 0, 1, 2.5, 2.5}}};
  p.span = {a, b};
  p.yesno = {{"y1", 0.3}, {"y2", -0.1}};
  absl::StatusOr<DecodedFile> d = DecodeDataset(ds, p, {});
  ASSERT_TRUE(d.ok()) << d.status();
  ASSERT_EQ(d->questions.size(), 3u);
  EXPECT_EQ(d->questions[0].question_id, "L");
  EXPECT_EQ(d->questions[0].example_ids, (std::vector<std::string>{"l1a", "l1b"}));
  EXPECT_EQ(d->questions[1].label, YesNo::kYes);
  EXPECT_EQ(d->questions[2].label, YesNo::kNo);
  absl::StatusOr<DecodedFile> back = ParseDecoded(SerializeDecoded(*d));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, *d);

  p.yesno.push_back({"nope", 1});
  EXPECT_FALSE(DecodeDataset(ds, p, {}).ok());
  p.yesno.pop_back();
  p.yesno.push_back({"f1", 1});  // wrong record kind
  EXPECT_FALSE(DecodeDataset(ds, p, {}).ok());
}

TEST(DecodeDatasetTest, SimilarityFile) {
  absl::StatusOr<SimilarityScores> s = ParseSimilarity(R"({"q": {"A": 0.5}})");
  ASSERT_TRUE(s.ok());
  EXPECT_DOUBLE_EQ(s->at("q").at("A"), 0.5);
  EXPECT_FALSE(ParseSimilarity(R"({"q": {"A": "x"}})").ok());
}

}  // namespace
}  // namespace biodenoise
