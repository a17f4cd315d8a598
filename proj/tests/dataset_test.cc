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


#include "biodenoise/dataset.h"

#include "gtest/gtest.h"

namespace biodenoise {
namespace {

QAExample Span(std::string id) {
  QAExample ex;
  ex.id = std::move(id);
  ex.question = "Nivolumab";
  ex.context = "Treated with Bortezomib.";
  ex.answers = {{"Bortezomib", 13}};
  ex.meta = {{"doc_id", "d"}};
  return ex;
}

QAExample YesNoExample(std::string id) {
  QAExample ex;
  ex.id = std::move(id);
  ex.question_type = QuestionType::kYesNo;
  ex.question = "Aspirin";
  ex.context = "Aspirin helps.";
  ex.yesno_label = YesNo::kYes;
  ex.provenance = Provenance::kAdversarial;
  return ex;
}

TEST(DatasetTest, RoundTripIsByteStable) {
  DatasetFile file = MakeDataset({Span("b"), YesNoExample("a"), Span("c")},
                                 {{"generated", 3}});
  file.run = {{"tool", "biodenoise"}};
  EXPECT_EQ(file.examples[0].id, "a");
  EXPECT_EQ(file.stats.total, 3u);
  EXPECT_EQ(file.stats.by_question_type.at("factoid"), 2u);
  const std::string text = SerializeDataset(file);
  absl::StatusOr<DatasetFile> parsed = ParseDataset(text);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(*parsed, file);
  EXPECT_EQ(SerializeDataset(*parsed), text);
}

TEST(DatasetTest, EmptyDatasetIsValid) {
  const std::string text = SerializeDataset(MakeDataset({}));
  absl::StatusOr<DatasetFile> parsed = ParseDataset(text);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_TRUE(parsed->examples.empty());
  EXPECT_EQ(parsed->stats.total, 0u);
}

TEST(DatasetTest, BadAnswerOffsetIsSchemaViolation) {
  QAExample ex = Span("a");
  ex.answers[0].answer_start = 12;
  nlohmann::json json = nlohmann::json::parse(SerializeDataset(MakeDataset({Span("a")})));
  json["examples"][0] = ExampleToJson(ex);
  absl::StatusOr<DatasetFile> parsed = ParseDataset(json.dump());
  ASSERT_FALSE(parsed.ok());
  EXPECT_NE(std::string(parsed.status().message()).find("SchemaViolation"),
            std::string::npos);
}

TEST(DatasetTest, RejectsStatsMismatchDuplicatesAndDisorder) {
  nlohmann::json json =
      nlohmann::json::parse(SerializeDataset(MakeDataset({Span("a"), Span("b")})));
  nlohmann::json bad_stats = json;
  bad_stats["stats"]["total"] = 5;
  EXPECT_FALSE(ParseDataset(bad_stats.dump()).ok());
  nlohmann::json dup = json;
  dup["examples"][1]["id"] = "a";
  EXPECT_FALSE(ParseDataset(dup.dump()).ok());
  nlohmann::json disorder = json;
  std::swap(disorder["examples"][0], disorder["examples"][1]);
  EXPECT_FALSE(ParseDataset(disorder.dump()).ok());
  nlohmann::json version = json;
  version["version"] = "other/2";
  EXPECT_FALSE(ParseDataset(version.dump()).ok());
  EXPECT_FALSE(ParseDataset("[]").ok());
}

TEST(DatasetTest, YesNoShapeIsEnforced) {
  QAExample ex = YesNoExample("a");
  ex.answers = {{"Aspirin", 0}};
  EXPECT_FALSE(ValidateExample(ex).ok());
  ex = YesNoExample("a");
  ex.yesno_label.reset();
  EXPECT_FALSE(ValidateExample(ex).ok());
  ex.meta = {{"has_gold", false}};
  EXPECT_TRUE(ValidateExample(ex).ok());
}

TEST(DatasetTest, IdsAreStable) {
  const std::string id = MakeExampleId("30000001", 2, {"a", "b"});
  EXPECT_EQ(id.substr(0, 13), "30000001-002-");
  EXPECT_EQ(id.size(), 25u);
  EXPECT_EQ(id, MakeExampleId("30000001", 2, {"a", "b"}));
  EXPECT_NE(id, MakeExampleId("30000001", 2, {"ab", ""}));
}

}  // namespace
}  // namespace biodenoise
