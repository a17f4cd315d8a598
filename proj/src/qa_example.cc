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


#include "biodenoise/qa_example.h"

#include <cstdio>

#include "absl/strings/str_cat.h"
#include "biodenoise/text_util.h"

namespace biodenoise {

std::string_view QuestionTypeName(QuestionType type) {
  switch (type) {
    case QuestionType::kFactoid:
      return "factoid";
    case QuestionType::kList:
      return "list";
    case QuestionType::kYesNo:
      return "yesno";
  }
  return "";
}

std::string_view YesNoName(YesNo label) {
  return label == YesNo::kYes ? "yes" : "no";
}

std::string_view ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kDenoise:
      return "denoise";
    case Provenance::kCloze:
      return "cloze";
    case Provenance::kBioasq:
      return "bioasq";
    case Provenance::kPubmedqa:
      return "pubmedqa";
    case Provenance::kAdversarial:
      return "adversarial";
  }
  return "";
}

std::optional<QuestionType> ParseQuestionType(std::string_view name) {
  for (QuestionType t :
       {QuestionType::kFactoid, QuestionType::kList, QuestionType::kYesNo}) {
    if (QuestionTypeName(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<YesNo> ParseYesNo(std::string_view name) {
  if (name == "yes") return YesNo::kYes;
  if (name == "no") return YesNo::kNo;
  return std::nullopt;
}

std::optional<Provenance> ParseProvenance(std::string_view name) {
  for (Provenance p : {Provenance::kDenoise, Provenance::kCloze,
                       Provenance::kBioasq, Provenance::kPubmedqa,
                       Provenance::kAdversarial}) {
    if (ProvenanceName(p) == name) return p;
  }
  return std::nullopt;
}

absl::Status ValidateExample(const QAExample& example) {
  auto violation = [&example](std::string_view field, std::string_view why) {
    return absl::InvalidArgumentError(
        absl::StrCat("example '", example.id, "' field ", std::string(field),
                     ": ", std::string(why)));
  };
  if (example.id.empty()) return violation("id", "empty");
  if (!IsValidUtf8(example.context) || !IsValidUtf8(example.question)) {
    return violation("context", "invalid UTF-8");
  }
  const Utf8Index index(example.context);
  for (size_t i = 0; i < example.answers.size(); ++i) {
    const Answer& a = example.answers[i];
    const size_t len = CharLength(a.text);
    const std::string field = absl::StrCat("answers[", i, "]");
    if (len == 0) return violation(field, "empty answer text");
    if (a.answer_start + len > index.size()) {
      return violation(field, "answer_start out of range");
    }
    if (index.Slice(a.answer_start, a.answer_start + len) != a.text) {
      return violation(field, "answer text does not match context slice");
    }
  }
  const bool gold = HasGold(example);
  if (example.question_type == QuestionType::kYesNo) {
    if (!example.answers.empty()) return violation("answers", "yes/no with spans");
    if (gold && !example.yesno_label) {
      return violation("yesno_label", "missing for yes/no example");
    }
  } else {
    if (example.yesno_label) return violation("yesno_label", "set on span example");
    const bool unalignable = example.meta.is_object() &&
                             example.meta.value("unalignable", false);
    if (gold && !unalignable && example.answers.empty()) {
      return violation("answers", "span example without answers");
    }
  }
  return absl::OkStatus();
}

std::string MakeExampleId(std::string_view source_key, size_t slot,
                          const std::vector<std::string_view>& provenance_parts) {
  char slot_buf[24];
  std::snprintf(slot_buf, sizeof(slot_buf), "%03zu", slot);
  return absl::StrCat(std::string(source_key), "-", slot_buf, "-",
                      HexU64(StableHash(provenance_parts), 12));
}

std::string QuestionKey(const QAExample& example) {
  if (example.meta.is_object()) {
    auto it = example.meta.find("question_id");
    if (it != example.meta.end() && it->is_string()) {
      return it->get<std::string>();
    }
  }
  return example.id;
}

bool HasGold(const QAExample& example) {
  return !example.meta.is_object() || example.meta.value("has_gold", true);
}

}  // namespace biodenoise
