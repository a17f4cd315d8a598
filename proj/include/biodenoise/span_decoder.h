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


#ifndef BIODENOISE_SPAN_DECODER_H_
#define BIODENOISE_SPAN_DECODER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/predictions.h"
#include "biodenoise/qa_example.h"
#include "json.hpp"

namespace biodenoise {

// Max-subtracted softmax. Errors: InvalidArgument "EmptyInput" and
// "NonFiniteInput".
absl::StatusOr<std::vector<double>> SoftmaxProbs(std::span<const double> logits);

double Sigmoid(double x);

struct SpanCandidate {
  size_t start_token = 0;
  size_t end_token = 0;
  double score = 0;  // start_logit[start] + end_logit[end]
  double prob = 0;
  std::string text;
  std::string example_id;

  bool operator==(const SpanCandidate&) const = default;
};

struct NBestOptions {
  size_t n = 20;
  size_t max_answer_tokens = 30;
  // Drop candidates whose normalized text repeats a higher-ranked one.
  bool dedup = true;
};

// Candidates ordered by score descending, then earlier start, then shorter
// span. Text is the context slice [tokens[i].char_start, tokens[j].char_end)
// when `context` is given, otherwise the token texts joined by spaces. Probs
// are a softmax over the returned scores.
absl::StatusOr<std::vector<SpanCandidate>> NBest(
    const SpanPredictionRecord& record, const std::string* context,
    const NBestOptions& options);

// Strict total order used by NBest.
bool CandidateBefore(const SpanCandidate& a, const SpanCandidate& b);

enum class ListScoreMode {
  kMergedSoftmax,  // prob over the question-level merged n-best
  kSigmoid,        // sigmoid of the raw span score
};

struct DecodeOptions {
  size_t n_best = 20;  // per context, before merging
  size_t top_k = 5;    // factoid answers kept
  size_t max_answer_tokens = 30;
  double list_threshold = 0.42;
  ListScoreMode list_mode = ListScoreMode::kMergedSoftmax;
  double rerank_weight = 0;

  absl::Status Validate() const;
  nlohmann::json ToJson() const;
};

// A span record and, optionally, the context it was produced from.
struct ContextPrediction {
  const SpanPredictionRecord* record = nullptr;
  const std::string* context = nullptr;
};

// Merges per-context n-best lists by raw score and deduplicates by normalized
// text, keeping the best-scoring occurrence. Probs are a softmax over the
// merged list. Errors: InvalidArgument "NoRecords(<question_id>)".
absl::StatusOr<std::vector<SpanCandidate>> MergeCandidates(
    std::string_view question_id, std::span<const ContextPrediction> records,
    const DecodeOptions& options);

// score += weight * sim[text]; missing entries count as 0. Re-sorted and
// probs recomputed.
std::vector<SpanCandidate> RerankWithSimilarity(
    std::vector<SpanCandidate> candidates,
    const std::map<std::string, double>& similarity, double weight);

// Top options.top_k merged candidates.
absl::StatusOr<std::vector<SpanCandidate>> DecodeFactoid(
    std::string_view question_id, std::span<const ContextPrediction> records,
    const DecodeOptions& options,
    const std::map<std::string, double>* similarity = nullptr);

// Every merged candidate whose list score is >= the threshold, or the top
// candidate alone when none qualifies.
absl::StatusOr<std::vector<SpanCandidate>> DecodeList(
    std::string_view question_id, std::span<const ContextPrediction> records,
    const DecodeOptions& options,
    const std::map<std::string, double>* similarity = nullptr);

// Threshold filter shared by DecodeList; `scores` parallels `candidates`.
std::vector<SpanCandidate> ApplyListThreshold(
    const std::vector<SpanCandidate>& candidates,
    std::span<const double> scores, double threshold);

struct YesNoDecision {
  YesNo label = YesNo::kNo;
  double aggregate_logit = 0;
  std::vector<double> record_probs;
};

// Sums the logits; yes iff the sum is strictly positive.
// Errors: InvalidArgument "NoRecords(<question_id>)".
absl::StatusOr<YesNoDecision> DecodeYesNo(std::string_view question_id,
                                          std::span<const double> logits);

}  // namespace biodenoise

#endif  // BIODENOISE_SPAN_DECODER_H_
