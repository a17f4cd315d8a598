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


#include "biodenoise/span_decoder.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "biodenoise/qa_metrics.h"
#include "biodenoise/text_util.h"

namespace biodenoise {
namespace {

absl::Status NoRecords(std::string_view question_id) {
  return absl::InvalidArgumentError(absl::StrCat("NoRecords(", std::string(question_id), ")"));
}

std::string CandidateText(const SpanPredictionRecord& record,
                          const std::string* context, const Utf8Index* index,
                          size_t i, size_t j) {
  if (context != nullptr) {
    return std::string(
        index->Slice(record.tokens[i].char_start, record.tokens[j].char_end));
  }
  std::string text;
  for (size_t k = i; k <= j; ++k) {
    if (k > i) text += ' ';
    text += record.tokens[k].text;
  }
  return text;
}

void AssignProbs(std::vector<SpanCandidate>& candidates) {
  if (candidates.empty()) return;
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const SpanCandidate& c : candidates) scores.push_back(c.score);
  absl::StatusOr<std::vector<double>> probs = SoftmaxProbs(scores);
  for (size_t i = 0; i < candidates.size(); ++i) {
    candidates[i].prob = probs.ok() ? (*probs)[i] : 0.0;
  }
}

// Keeps the first candidate per normalized text, preserving order.
std::vector<SpanCandidate> Dedup(std::vector<SpanCandidate> candidates,
                                 size_t limit) {
  std::vector<SpanCandidate> out;
  std::set<std::string> seen;
  for (SpanCandidate& c : candidates) {
    if (out.size() >= limit) break;
    if (seen.insert(NormalizeAnswer(c.text)).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

absl::StatusOr<std::vector<double>> SoftmaxProbs(std::span<const double> logits) {
  if (logits.empty()) return absl::InvalidArgumentError("EmptyInput");
  double max = logits[0];
  for (double x : logits) {
    if (!std::isfinite(x)) return absl::InvalidArgumentError("NonFiniteInput");
    max = std::max(max, x);
  }
  std::vector<double> out(logits.size());
  double sum = 0;
  for (size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - max);
    sum += out[i];
  }
  for (double& p : out) p /= sum;
  return out;
}

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

bool CandidateBefore(const SpanCandidate& a, const SpanCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.start_token != b.start_token) return a.start_token < b.start_token;
  if (a.end_token != b.end_token) return a.end_token < b.end_token;
  return a.example_id < b.example_id;
}

absl::StatusOr<std::vector<SpanCandidate>> NBest(
    const SpanPredictionRecord& record, const std::string* context,
    const NBestOptions& options) {
  if (options.n == 0 || options.max_answer_tokens == 0) {
    return absl::InvalidArgumentError("n and max_answer_tokens must be >= 1");
  }
  std::optional<Utf8Index> index;
  if (context != nullptr) index.emplace(*context);
  if (absl::Status s = ValidateSpanRecord(
          record, index ? std::optional<size_t>(index->size()) : std::nullopt);
      !s.ok()) {
    return s;
  }
  const size_t n_tokens = record.tokens.size();
  std::vector<SpanCandidate> all;
  all.reserve(n_tokens * std::min(n_tokens, options.max_answer_tokens));
  for (size_t i = 0; i < n_tokens; ++i) {
    const size_t last = std::min(n_tokens, i + options.max_answer_tokens);
    for (size_t j = i; j < last; ++j) {
      SpanCandidate c;
      c.start_token = i;
      c.end_token = j;
      c.score = record.tokens[i].start_logit + record.tokens[j].end_logit;
      c.example_id = record.example_id;
      all.push_back(std::move(c));
    }
  }
  std::vector<SpanCandidate> out;
  if (!options.dedup) {
    const size_t keep = std::min(options.n, all.size());
    std::partial_sort(all.begin(), all.begin() + keep, all.end(), CandidateBefore);
    all.resize(keep);
    for (SpanCandidate& c : all) {
      c.text = CandidateText(record, context, index ? &*index : nullptr,
                             c.start_token, c.end_token);
    }
    out = std::move(all);
  } else {
    std::sort(all.begin(), all.end(), CandidateBefore);
    std::set<std::string> seen;
    for (SpanCandidate& c : all) {
      if (out.size() >= options.n) break;
      c.text = CandidateText(record, context, index ? &*index : nullptr,
                             c.start_token, c.end_token);
      if (seen.insert(NormalizeAnswer(c.text)).second) out.push_back(std::move(c));
    }
  }
  AssignProbs(out);
  return out;
}

absl::Status DecodeOptions::Validate() const {
  if (n_best == 0) return absl::InvalidArgumentError("n_best must be >= 1");
  if (top_k == 0) return absl::InvalidArgumentError("top_k must be >= 1");
  if (max_answer_tokens == 0) {
    return absl::InvalidArgumentError("max_answer_tokens must be >= 1");
  }
  if (!(list_threshold >= 0 && list_threshold <= 1)) {
    return absl::InvalidArgumentError("list_threshold must be in [0, 1]");
  }
  if (!std::isfinite(rerank_weight)) {
    return absl::InvalidArgumentError("rerank_weight must be finite");
  }
  return absl::OkStatus();
}

nlohmann::json DecodeOptions::ToJson() const {
  return {{"n_best", n_best},
          {"top_k", top_k},
          {"max_answer_tokens", max_answer_tokens},
          {"list_threshold", list_threshold},
          {"list_mode",
           list_mode == ListScoreMode::kMergedSoftmax ? "merged_softmax" : "sigmoid"},
          {"rerank_weight", rerank_weight}};
}

absl::StatusOr<std::vector<SpanCandidate>> MergeCandidates(
    std::string_view question_id, std::span<const ContextPrediction> records,
    const DecodeOptions& options) {
  if (records.empty()) return NoRecords(question_id);
  std::vector<SpanCandidate> merged;
  const NBestOptions nbest{options.n_best, options.max_answer_tokens, true};
  for (const ContextPrediction& p : records) {
    absl::StatusOr<std::vector<SpanCandidate>> list =
        NBest(*p.record, p.context, nbest);
    if (!list.ok()) return list.status();
    for (SpanCandidate& c : *list) merged.push_back(std::move(c));
  }
  std::sort(merged.begin(), merged.end(), CandidateBefore);
  merged = Dedup(std::move(merged), merged.size());
  AssignProbs(merged);
  return merged;
}

std::vector<SpanCandidate> RerankWithSimilarity(
    std::vector<SpanCandidate> candidates,
    const std::map<std::string, double>& similarity, double weight) {
  if (weight == 0 || candidates.empty()) return candidates;
  for (SpanCandidate& c : candidates) {
    auto it = similarity.find(c.text);
    if (it != similarity.end()) c.score += weight * it->second;
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const SpanCandidate& a, const SpanCandidate& b) {
                     return a.score > b.score;
                   });
  AssignProbs(candidates);
  return candidates;
}

absl::StatusOr<std::vector<SpanCandidate>> DecodeFactoid(
    std::string_view question_id, std::span<const ContextPrediction> records,
    const DecodeOptions& options, const std::map<std::string, double>* similarity) {
  absl::StatusOr<std::vector<SpanCandidate>> merged =
      MergeCandidates(question_id, records, options);
  if (!merged.ok()) return merged.status();
  std::vector<SpanCandidate> ranked =
      similarity ? RerankWithSimilarity(*std::move(merged), *similarity,
                                        options.rerank_weight)
                 : *std::move(merged);
  if (ranked.size() > options.top_k) ranked.resize(options.top_k);
  return ranked;
}

std::vector<SpanCandidate> ApplyListThreshold(
    const std::vector<SpanCandidate>& candidates,
    std::span<const double> scores, double threshold) {
  std::vector<SpanCandidate> out;
  for (size_t i = 0; i < candidates.size() && i < scores.size(); ++i) {
    if (scores[i] >= threshold) out.push_back(candidates[i]);
  }
  if (out.empty() && !candidates.empty()) out.push_back(candidates.front());
  return out;
}

absl::StatusOr<std::vector<SpanCandidate>> DecodeList(
    std::string_view question_id, std::span<const ContextPrediction> records,
    const DecodeOptions& options, const std::map<std::string, double>* similarity) {
  absl::StatusOr<std::vector<SpanCandidate>> merged =
      MergeCandidates(question_id, records, options);
  if (!merged.ok()) return merged.status();
  std::vector<SpanCandidate> ranked =
      similarity ? RerankWithSimilarity(*std::move(merged), *similarity,
                                        options.rerank_weight)
                 : *std::move(merged);
  std::vector<double> scores;
  for (const SpanCandidate& c : ranked) {
    scores.push_back(options.list_mode == ListScoreMode::kMergedSoftmax
                         ? c.prob
                         : Sigmoid(c.score));
  }
  return ApplyListThreshold(ranked, scores, options.list_threshold);
}

absl::StatusOr<YesNoDecision> DecodeYesNo(std::string_view question_id,
                                          std::span<const double> logits) {
  if (logits.empty()) return NoRecords(question_id);
  YesNoDecision out;
  for (double x : logits) {
    if (!std::isfinite(x)) return absl::InvalidArgumentError("NonFiniteInput");
    out.aggregate_logit += x;
    out.record_probs.push_back(Sigmoid(x));
  }
  out.label = out.aggregate_logit > 0 ? YesNo::kYes : YesNo::kNo;
  return out;
}

}  // namespace biodenoise
