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


#ifndef BIODENOISE_PREDICTIONS_H_
#define BIODENOISE_PREDICTIONS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace biodenoise {

// One context token with its start and end logits. Character offsets are
// code points into the example context, end exclusive.
struct TokenLogits {
  std::string text;
  size_t char_start = 0;
  size_t char_end = 0;
  double start_logit = 0;
  double end_logit = 0;

  bool operator==(const TokenLogits&) const = default;
};

struct SpanPredictionRecord {
  std::string example_id;
  std::vector<TokenLogits> tokens;

  bool operator==(const SpanPredictionRecord&) const = default;
};

struct YesNoPredictionRecord {
  std::string example_id;
  double logit = 0;

  bool operator==(const YesNoPredictionRecord&) const = default;
};

// Parsed prediction file. Records keep their file order.
struct PredictionFile {
  std::vector<SpanPredictionRecord> span;
  std::vector<YesNoPredictionRecord> yesno;

  bool operator==(const PredictionFile&) const = default;
};

// At least one token, finite logits, char_start <= char_end, token spans
// non-decreasing and non-overlapping, and, when `context_chars` is given,
// within the context.
absl::Status ValidateSpanRecord(const SpanPredictionRecord& record,
                                std::optional<size_t> context_chars = std::nullopt);

// JSON Lines, one record per line; blank lines are ignored. A line with a
// "tokens" array is a span record and a line with "logit" is a yes/no record.
// Errors: InvalidArgument "InvalidRecord(<path>:<line>): ..." and
// "DuplicateRecord(<example_id>)".
absl::StatusOr<PredictionFile> ParsePredictions(std::string_view text,
                                                std::string_view path = "<memory>");
absl::StatusOr<PredictionFile> ReadPredictions(const std::string& path);

// Span records first, then yes/no records, each in stored order.
std::string SerializePredictions(const PredictionFile& predictions);

}  // namespace biodenoise

#endif  // BIODENOISE_PREDICTIONS_H_
