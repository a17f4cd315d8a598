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


#ifndef BIODENOISE_QA_METRICS_H_
#define BIODENOISE_QA_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/qa_example.h"
#include "json.hpp"

namespace biodenoise {

// NFKC case-folded, whitespace collapsed, outer punctuation removed and one
// leading article (a, an, the) dropped when other words follow. Idempotent.
std::string NormalizeAnswer(std::string_view text);

// Acceptable strings for one gold answer item.
using AnswerVariants = std::vector<std::string>;

// 1-based rank of the first prediction, within the first `window`, that
// matches any variant; nullopt when none does.
std::optional<size_t> FirstMatchRank(const AnswerVariants& gold,
                                     std::span<const std::string> predictions,
                                     size_t window = 5);

struct FactoidScores {
  double sacc = 0;
  double lacc = 0;
  double mrr = 0;
  size_t n = 0;
};

// From per-question first-match ranks (nullopt = miss).
FactoidScores FactoidMetrics(std::span<const std::optional<size_t>> ranks,
                             size_t window = 5);

struct ListQuestionScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  size_t matched = 0;
  size_t predicted = 0;  // after deduplication
  size_t gold = 0;
};

// Predictions are deduplicated by normalized text and then matched one to one
// against gold items (maximum bipartite matching).
ListQuestionScore ScoreListQuestion(std::span<const AnswerVariants> gold,
                                    std::span<const std::string> predictions);

struct ListScores {
  double macro_precision = 0;
  double macro_recall = 0;
  double macro_f1 = 0;
  size_t n = 0;
};

ListScores ListMetrics(std::span<const ListQuestionScore> questions);

struct YesNoScores {
  double acc = 0;
  double f1 = 0;  // mean of f1_yes and f1_no
  double f1_yes = 0;
  double f1_no = 0;
  size_t n = 0;
  // Classes with no gold instance. Their F1 is 0 unless never predicted.
  std::vector<std::string> absent_classes;
};

// Errors: InvalidArgument when the spans differ in length.
absl::StatusOr<YesNoScores> YesNoMetrics(std::span<const YesNo> gold,
                                         std::span<const YesNo> predicted);

}  // namespace biodenoise

#endif  // BIODENOISE_QA_METRICS_H_
