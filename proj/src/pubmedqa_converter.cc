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


#include "biodenoise/pubmedqa_converter.h"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "biodenoise/qa_example.h"
#include "biodenoise/text_util.h"
#include "json.hpp"

namespace biodenoise {
namespace {

absl::Status Malformed(std::string_view where, std::string_view why) {
  return absl::InvalidArgumentError(
      absl::StrCat("MalformedJson: ", std::string(where), ": ", std::string(why)));
}

}  // namespace

absl::StatusOr<DatasetFile> ConvertPubmedqa(std::string_view json_text) {
  const nlohmann::json json =
      nlohmann::json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (json.is_discarded()) return Malformed("<root>", "not valid JSON");
  if (!json.is_object()) return Malformed("<root>", "expected an object keyed by PMID");

  std::map<std::string, size_t> labels = {{"maybe", 0}, {"no", 0}, {"yes", 0}};
  std::vector<QAExample> examples;
  for (const auto& [pmid, item] : json.items()) {
    if (!item.is_object()) return Malformed(pmid, "instance is not an object");
    if (!item.contains("QUESTION") || !item["QUESTION"].is_string()) {
      return Malformed(pmid, "missing string field 'QUESTION'");
    }
    if (!item.contains("CONTEXTS") || !item["CONTEXTS"].is_array()) {
      return Malformed(pmid, "missing array field 'CONTEXTS'");
    }
    if (!item.contains("final_decision") || !item["final_decision"].is_string()) {
      return Malformed(pmid, "missing string field 'final_decision'");
    }
    const std::string decision = absl::AsciiStrToLower(
        std::string(TrimSpace(item["final_decision"].get<std::string>())));
    if (!labels.contains(decision)) {
      return Malformed(pmid, absl::StrCat("unknown final_decision '", decision, "'"));
    }
    ++labels[decision];
    if (decision == "maybe") continue;

    std::vector<std::string> paragraphs;
    for (const nlohmann::json& c : item["CONTEXTS"]) {
      if (!c.is_string()) return Malformed(pmid, "context is not a string");
      const std::string_view trimmed = TrimSpace(c.get_ref<const std::string&>());
      if (!trimmed.empty()) paragraphs.emplace_back(trimmed);
    }
    if (paragraphs.empty()) return Malformed(pmid, "no non-empty context");

    QAExample ex;
    ex.id = MakeExampleId(pmid, 0, {pmid, "pubmedqa"});
    ex.question_type = QuestionType::kYesNo;
    ex.question = item["QUESTION"].get<std::string>();
    ex.context = absl::StrJoin(paragraphs, " ");
    ex.yesno_label = *ParseYesNo(decision);
    ex.provenance = Provenance::kPubmedqa;
    ex.meta = {{"question_id", pmid}, {"pmid", pmid}};
    examples.push_back(std::move(ex));
  }
  nlohmann::json source_stats = {{"instances", json.size()},
                                 {"labels", labels},
                                 {"dropped_maybe", labels["maybe"]}};
  return MakeDataset(std::move(examples), std::move(source_stats));
}

}  // namespace biodenoise
