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


#ifndef BIODENOISE_EVALUATION_H_
#define BIODENOISE_EVALUATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/dataset.h"
#include "biodenoise/decoding.h"
#include "biodenoise/qa_metrics.h"
#include "json.hpp"

namespace biodenoise {

inline constexpr std::string_view kReportVersion = "biodenoise-report/1";

struct EvaluationOptions {
  size_t mrr_window = 5;
};

struct QuestionRow {
  std::string question_id;
  QuestionType question_type = QuestionType::kFactoid;
  bool missing = false;
  std::vector<std::string> predictions;  // span types
  std::optional<size_t> rank;            // factoid
  double precision = 0, recall = 0, f1 = 0;  // list
  std::optional<YesNo> gold_label, predicted_label;  // yes/no

  bool operator==(const QuestionRow&) const = default;
};

struct EvaluationReport {
  size_t mrr_window = 5;
  FactoidScores factoid;
  ListScores list;
  YesNoScores yesno;
  size_t questions_without_gold = 0;
  std::vector<std::string> flags;  // MissingPrediction(id), AbsentClass(label)
  std::vector<QuestionRow> rows;   // sorted by question_id
  // Reproducibility header written by the command-line tool.
  nlohmann::json run = nlohmann::json::object();

  nlohmann::json ToJson() const;
  static absl::StatusOr<EvaluationReport> FromJson(const nlohmann::json& json);
  // Plain-text table: one block per question type, ranking metrics last.
  std::string ToText() const;
};

bool operator==(const EvaluationReport& a, const EvaluationReport& b);

// Gold answer items of one question: meta.answer_variants when present,
// otherwise the aligned answers (factoid: one item of all distinct texts;
// list: one item per distinct normalized text).
std::vector<AnswerVariants> GoldItems(const std::vector<const QAExample*>& examples);

// Questions without gold are skipped and counted. A gold question missing
// from `decoded` scores as a miss (a wrong label for yes/no) and is flagged.
// Errors: InvalidArgument "IdMismatch: ..." when `decoded` names an unknown
// question or disagrees on its type.
absl::StatusOr<EvaluationReport> Evaluate(const DatasetFile& dataset,
                                          const DecodedFile& decoded,
                                          const EvaluationOptions& options = {});

// Canonical report text (sorted keys, two-space indent, trailing newline).
std::string SerializeReport(const EvaluationReport& report);

}  // namespace biodenoise

#endif  // BIODENOISE_EVALUATION_H_
