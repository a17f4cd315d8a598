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

#include <algorithm>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "biodenoise/file_util.h"

namespace biodenoise {
namespace {

absl::Status SchemaViolation(std::string_view where, std::string_view field,
                             std::string_view why) {
  return absl::InvalidArgumentError(
      absl::StrCat("SchemaViolation(", std::string(where), ", ",
                   std::string(field), "): ", std::string(why)));
}

bool IsString(const nlohmann::json& obj, const char* key) {
  return obj.contains(key) && obj[key].is_string();
}

}  // namespace

DatasetStats DatasetStats::Count(std::span<const QAExample> examples) {
  DatasetStats stats;
  for (const QAExample& ex : examples) {
    ++stats.by_question_type[std::string(QuestionTypeName(ex.question_type))];
    ++stats.by_provenance[std::string(ProvenanceName(ex.provenance))];
  }
  stats.total = examples.size();
  return stats;
}

nlohmann::json DatasetStats::ToJson() const {
  return {{"by_question_type", by_question_type},
          {"by_provenance", by_provenance},
          {"total", total}};
}

DatasetFile MakeDataset(std::vector<QAExample> examples,
                        nlohmann::json source_stats) {
  std::stable_sort(examples.begin(), examples.end(),
                   [](const QAExample& a, const QAExample& b) {
                     return a.id < b.id;
                   });
  DatasetFile out;
  out.stats = DatasetStats::Count(examples);
  out.examples = std::move(examples);
  out.source_stats = std::move(source_stats);
  return out;
}

nlohmann::json ExampleToJson(const QAExample& ex) {
  nlohmann::json answers = nlohmann::json::array();
  for (const Answer& a : ex.answers) {
    answers.push_back({{"text", a.text}, {"answer_start", a.answer_start}});
  }
  nlohmann::json json = {{"id", ex.id},
                         {"question_type", QuestionTypeName(ex.question_type)},
                         {"question", ex.question},
                         {"context", ex.context},
                         {"answers", std::move(answers)},
                         {"provenance", ProvenanceName(ex.provenance)},
                         {"meta", ex.meta}};
  if (ex.yesno_label) json["yesno_label"] = YesNoName(*ex.yesno_label);
  return json;
}

absl::StatusOr<QAExample> ExampleFromJson(const nlohmann::json& json,
                                          std::string_view where) {
  if (!json.is_object()) return SchemaViolation(where, "example", "not an object");
  for (const char* key : {"id", "question_type", "question", "context",
                          "provenance"}) {
    if (!IsString(json, key)) {
      return SchemaViolation(where, key, "missing or not a string");
    }
  }
  QAExample ex;
  ex.id = json["id"].get<std::string>();
  const std::string scope = absl::StrCat(std::string(where), " example ", ex.id);
  const auto type = ParseQuestionType(json["question_type"].get<std::string>());
  if (!type) return SchemaViolation(scope, "question_type", "unknown value");
  ex.question_type = *type;
  const auto provenance = ParseProvenance(json["provenance"].get<std::string>());
  if (!provenance) return SchemaViolation(scope, "provenance", "unknown value");
  ex.provenance = *provenance;
  ex.question = json["question"].get<std::string>();
  ex.context = json["context"].get<std::string>();
  if (!json.contains("answers") || !json["answers"].is_array()) {
    return SchemaViolation(scope, "answers", "missing or not an array");
  }
  for (const nlohmann::json& a : json["answers"]) {
    if (!a.is_object() || !IsString(a, "text") || !a.contains("answer_start") ||
        !a["answer_start"].is_number_unsigned()) {
      return SchemaViolation(scope, "answers", "malformed answer");
    }
    ex.answers.push_back(
        {a["text"].get<std::string>(), a["answer_start"].get<size_t>()});
  }
  if (json.contains("yesno_label")) {
    const auto label = json["yesno_label"].is_string()
                            ? ParseYesNo(json["yesno_label"].get<std::string>())
                            : std::nullopt;
    if (!label) return SchemaViolation(scope, "yesno_label", "not yes/no");
    ex.yesno_label = *label;
  }
  if (json.contains("meta")) {
    if (!json["meta"].is_object()) {
      return SchemaViolation(scope, "meta", "not an object");
    }
    ex.meta = json["meta"];
  }
  if (absl::Status s = ValidateExample(ex); !s.ok()) {
    return SchemaViolation(scope, "answers", std::string(s.message()));
  }
  return ex;
}

std::string SerializeDataset(const DatasetFile& dataset) {
  std::vector<const QAExample*> order;
  order.reserve(dataset.examples.size());
  for (const QAExample& ex : dataset.examples) order.push_back(&ex);
  std::stable_sort(order.begin(), order.end(),
                   [](const QAExample* a, const QAExample* b) {
                     return a->id < b->id;
                   });
  std::string out = "{\n\"examples\": [";
  for (size_t i = 0; i < order.size(); ++i) {
    absl::StrAppend(&out, i == 0 ? "\n" : ",\n",
                    ExampleToJson(*order[i]).dump());
  }
  absl::StrAppend(&out, dataset.examples.empty() ? "" : "\n", "],\n",
                  "\"run\": ", dataset.run.dump(), ",\n",
                  "\"source_stats\": ", dataset.source_stats.dump(), ",\n",
                  "\"stats\": ", DatasetStats::Count(dataset.examples).ToJson().dump(), ",\n",
                  "\"version\": ", nlohmann::json(dataset.version).dump(),
                  "\n}\n");
  return out;
}

absl::StatusOr<DatasetFile> ParseDataset(std::string_view text,
                                         std::string_view path) {
  nlohmann::json json =
      nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (json.is_discarded() || !json.is_object()) {
    return SchemaViolation(path, "<root>", "not a JSON object");
  }
  DatasetFile out;
  if (!IsString(json, "version")) {
    return SchemaViolation(path, "version", "missing or not a string");
  }
  out.version = json["version"].get<std::string>();
  if (out.version != kDatasetVersion) {
    return SchemaViolation(path, "version",
                           absl::StrCat("unsupported version '", out.version, "'"));
  }
  if (!json.contains("examples") || !json["examples"].is_array()) {
    return SchemaViolation(path, "examples", "missing or not an array");
  }
  std::set<std::string> seen;
  for (const nlohmann::json& item : json["examples"]) {
    absl::StatusOr<QAExample> ex = ExampleFromJson(item, path);
    if (!ex.ok()) return ex.status();
    if (!seen.insert(ex->id).second) {
      return SchemaViolation(path, "id", absl::StrCat("duplicate id '", ex->id, "'"));
    }
    if (!out.examples.empty() && out.examples.back().id > ex->id) {
      return SchemaViolation(path, "examples", "not sorted by id");
    }
    out.examples.push_back(*std::move(ex));
  }
  for (const char* key : {"run", "source_stats"}) {
    if (json.contains(key)) {
      if (!json[key].is_object()) return SchemaViolation(path, key, "not an object");
      (std::string_view(key) == "run" ? out.run : out.source_stats) = json[key];
    }
  }
  out.stats = DatasetStats::Count(out.examples);
  if (!json.contains("stats") || json["stats"] != out.stats.ToJson()) {
    return SchemaViolation(path, "stats", "does not match a recount of examples");
  }
  return out;
}

absl::Status WriteDataset(const DatasetFile& dataset, const std::string& path) {
  return WriteFileAtomic(path, SerializeDataset(dataset));
}

absl::StatusOr<DatasetFile> ReadDataset(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  return ParseDataset(*text, path);
}

}  // namespace biodenoise
