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


#ifndef BIODENOISE_QA_EXAMPLE_H_
#define BIODENOISE_QA_EXAMPLE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "json.hpp"

namespace biodenoise {

enum class QuestionType { kFactoid, kList, kYesNo };
enum class YesNo { kYes, kNo };
enum class Provenance { kDenoise, kCloze, kBioasq, kPubmedqa, kAdversarial };

std::string_view QuestionTypeName(QuestionType type);
std::string_view YesNoName(YesNo label);
std::string_view ProvenanceName(Provenance provenance);
std::optional<QuestionType> ParseQuestionType(std::string_view name);
std::optional<YesNo> ParseYesNo(std::string_view name);
std::optional<Provenance> ParseProvenance(std::string_view name);

struct Answer {
  std::string text;
  size_t answer_start = 0;  // code points into the context

  bool operator==(const Answer&) const = default;
};

// One unified extractive-QA record (SQuAD-style).
//
// Span examples (factoid, list) carry at least one answer and no label;
// yes/no examples carry a label and no answers. Two meta flags relax this:
// "unalignable": true marks a span example whose gold answer does not occur
// in the context, and "has_gold": false marks an unlabeled test question.
struct QAExample {
  std::string id;
  QuestionType question_type = QuestionType::kFactoid;
  std::string question;
  std::string context;
  std::vector<Answer> answers;
  std::optional<YesNo> yesno_label;
  Provenance provenance = Provenance::kDenoise;
  nlohmann::json meta = nlohmann::json::object();

  bool operator==(const QAExample&) const = default;
};

// OK iff every answer slice-matches the context and the answers/label shape
// fits the question type. The message names the offending field.
absl::Status ValidateExample(const QAExample& example);

// "<source_key>-<slot>-<hash>", where slot is zero-padded to three digits and
// hash is 12 hex digits of StableHash(provenance_parts).
std::string MakeExampleId(std::string_view source_key, size_t slot,
                          const std::vector<std::string_view>& provenance_parts);

// Examples sharing a question (one BioASQ question over several snippets)
// carry meta.question_id; otherwise the example id is the question key.
std::string QuestionKey(const QAExample& example);

bool HasGold(const QAExample& example);

}  // namespace biodenoise

#endif  // BIODENOISE_QA_EXAMPLE_H_
