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


#ifndef BIODENOISE_DECODING_H_
#define BIODENOISE_DECODING_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/dataset.h"
#include "biodenoise/predictions.h"
#include "biodenoise/qa_example.h"
#include "biodenoise/span_decoder.h"
#include "json.hpp"

namespace biodenoise {

inline constexpr std::string_view kDecodedVersion = "biodenoise-decoded/1";

struct DecodedAnswer {
  std::string text;
  double score = 0;
  double prob = 0;

  bool operator==(const DecodedAnswer&) const = default;
};

// Decoder output for one question (all of its contexts).
struct DecodedQuestion {
  std::string question_id;
  QuestionType question_type = QuestionType::kFactoid;
  std::vector<std::string> example_ids;  // contexts that had a record
  std::vector<DecodedAnswer> answers;    // factoid: ranked; list: the set
  std::optional<YesNo> label;
  double aggregate_logit = 0;

  bool operator==(const DecodedQuestion&) const = default;
};

struct DecodedFile {
  std::string version = std::string(kDecodedVersion);
  std::vector<DecodedQuestion> questions;  // sorted by question_id
  nlohmann::json run = nlohmann::json::object();

  bool operator==(const DecodedFile&) const = default;
};

// Per-question similarity scores: question_id -> (answer text -> score).
using SimilarityScores = std::map<std::string, std::map<std::string, double>>;

// Groups examples by question, decodes every question with at least one
// record and leaves the others out. Errors: InvalidArgument
// "IdMismatch: ..." for records naming unknown examples or of the wrong kind.
absl::StatusOr<DecodedFile> DecodeDataset(const DatasetFile& dataset,
                                          const PredictionFile& predictions,
                                          const DecodeOptions& options,
                                          const SimilarityScores* similarity = nullptr);

std::string SerializeDecoded(const DecodedFile& decoded);
absl::StatusOr<DecodedFile> ParseDecoded(std::string_view text,
                                         std::string_view path = "<memory>");

absl::StatusOr<SimilarityScores> ParseSimilarity(std::string_view text);

}  // namespace biodenoise

#endif  // BIODENOISE_DECODING_H_
