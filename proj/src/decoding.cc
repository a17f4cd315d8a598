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


#include "biodenoise/decoding.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace biodenoise {
namespace {

absl::Status IdMismatch(std::string_view why) {
  return absl::InvalidArgumentError(absl::StrCat("IdMismatch: ", std::string(why)));
}

absl::Status Malformed(std::string_view path, std::string_view why) {
  return absl::InvalidArgumentError(
      absl::StrCat("SchemaViolation(", std::string(path), ", decoded): ",
                   std::string(why)));
}

struct QuestionGroup {
  QuestionType type = QuestionType::kFactoid;
  std::vector<const QAExample*> examples;
};

}  // namespace

absl::StatusOr<DecodedFile> DecodeDataset(const DatasetFile& dataset,
                                          const PredictionFile& predictions,
                                          const DecodeOptions& options,
                                          const SimilarityScores* similarity) {
  if (absl::Status s = options.Validate(); !s.ok()) return s;
  std::map<std::string, const QAExample*> by_id;
  std::map<std::string, QuestionGroup> groups;
  for (const QAExample& ex : dataset.examples) {
    by_id[ex.id] = &ex;
    auto [it, inserted] = groups.try_emplace(QuestionKey(ex));
    if (inserted) {
      it->second.type = ex.question_type;
    } else if (it->second.type != ex.question_type) {
      return absl::InvalidArgumentError(absl::StrCat(
          "question ", it->first, " mixes question types"));
    }
    it->second.examples.push_back(&ex);
  }

  std::map<std::string, const SpanPredictionRecord*> span_records;
  for (const SpanPredictionRecord& r : predictions.span) {
    auto it = by_id.find(r.example_id);
    if (it == by_id.end()) {
      return IdMismatch(absl::StrCat("no example '", r.example_id, "'"));
    }
    if (it->second->question_type == QuestionType::kYesNo) {
      return IdMismatch(absl::StrCat("span record for yes/no example '",
                                     r.example_id, "'"));
    }
    span_records[r.example_id] = &r;
  }
  std::map<std::string, double> yesno_records;
  for (const YesNoPredictionRecord& r : predictions.yesno) {
    auto it = by_id.find(r.example_id);
    if (it == by_id.end()) {
      return IdMismatch(absl::StrCat("no example '", r.example_id, "'"));
    }
    if (it->second->question_type != QuestionType::kYesNo) {
      return IdMismatch(absl::StrCat("yes/no record for span example '",
                                     r.example_id, "'"));
    }
    yesno_records[r.example_id] = r.logit;
  }

  DecodedFile out;
  for (const auto& [question_id, group] : groups) {
    DecodedQuestion q;
    q.question_id = question_id;
    q.question_type = group.type;
    if (group.type == QuestionType::kYesNo) {
      std::vector<double> logits;
      for (const QAExample* ex : group.examples) {
        auto it = yesno_records.find(ex->id);
        if (it == yesno_records.end()) continue;
        logits.push_back(it->second);
        q.example_ids.push_back(ex->id);
      }
      if (logits.empty()) continue;
      absl::StatusOr<YesNoDecision> decision = DecodeYesNo(question_id, logits);
      if (!decision.ok()) return decision.status();
      q.label = decision->label;
      q.aggregate_logit = decision->aggregate_logit;
    } else {
      std::vector<ContextPrediction> records;
      for (const QAExample* ex : group.examples) {
        auto it = span_records.find(ex->id);
        if (it == span_records.end()) continue;
        records.push_back({it->second, &ex->context});
        q.example_ids.push_back(ex->id);
      }
      if (records.empty()) continue;
      const std::map<std::string, double>* sims = nullptr;
      if (similarity != nullptr) {
        auto it = similarity->find(question_id);
        if (it != similarity->end()) sims = &it->second;
      }
      absl::StatusOr<std::vector<SpanCandidate>> answers =
          group.type == QuestionType::kFactoid
              ? DecodeFactoid(question_id, records, options, sims)
              : DecodeList(question_id, records, options, sims);
      if (!answers.ok()) {
        return absl::Status(answers.status().code(),
                            absl::StrCat("question ", question_id, ": ",
                                         answers.status().message()));
      }
      for (const SpanCandidate& c : *answers) {
        q.answers.push_back({c.text, c.score, c.prob});
      }
    }
    out.questions.push_back(std::move(q));
  }
  return out;
}

std::string SerializeDecoded(const DecodedFile& decoded) {
  std::string out = "{\n\"questions\": [";
  for (size_t i = 0; i < decoded.questions.size(); ++i) {
    const DecodedQuestion& q = decoded.questions[i];
    nlohmann::json answers = nlohmann::json::array();
    for (const DecodedAnswer& a : q.answers) {
      answers.push_back({{"text", a.text}, {"score", a.score}, {"prob", a.prob}});
    }
    nlohmann::json j = {{"question_id", q.question_id},
                        {"question_type", QuestionTypeName(q.question_type)},
                        {"example_ids", q.example_ids},
                        {"answers", std::move(answers)}};
    if (q.label) {
      j["label"] = YesNoName(*q.label);
      j["aggregate_logit"] = q.aggregate_logit;
    }
    absl::StrAppend(&out, i == 0 ? "\n" : ",\n", j.dump());
  }
  absl::StrAppend(&out, decoded.questions.empty() ? "" : "\n", "],\n",
                  "\"run\": ", decoded.run.dump(), ",\n",
                  "\"version\": ", nlohmann::json(decoded.version).dump(),
                  "\n}\n");
  return out;
}

absl::StatusOr<DecodedFile> ParseDecoded(std::string_view text,
                                         std::string_view path) {
  const nlohmann::json json =
      nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (json.is_discarded() || !json.is_object()) {
    return Malformed(path, "not a JSON object");
  }
  DecodedFile out;
  if (json.value("version", "") != kDecodedVersion) {
    return Malformed(path, "missing or unsupported version");
  }
  if (json.contains("run")) out.run = json["run"];
  if (!json.contains("questions") || !json["questions"].is_array()) {
    return Malformed(path, "missing questions array");
  }
  try {
    for (const nlohmann::json& j : json["questions"]) {
      DecodedQuestion q;
      q.question_id = j.at("question_id").get<std::string>();
      const auto type = ParseQuestionType(j.at("question_type").get<std::string>());
      if (!type) return Malformed(path, "unknown question_type");
      q.question_type = *type;
      q.example_ids = j.at("example_ids").get<std::vector<std::string>>();
      for (const nlohmann::json& a : j.at("answers")) {
        q.answers.push_back({a.at("text").get<std::string>(),
                             a.at("score").get<double>(),
                             a.at("prob").get<double>()});
      }
      if (j.contains("label")) {
        q.label = ParseYesNo(j["label"].get<std::string>());
        if (!q.label) return Malformed(path, "label is not yes/no");
        q.aggregate_logit = j.value("aggregate_logit", 0.0);
      }
      if (q.question_type == QuestionType::kYesNo && !q.label) {
        return Malformed(path, absl::StrCat("question ", q.question_id,
                                            " has no label"));
      }
      if (!out.questions.empty() &&
          out.questions.back().question_id >= q.question_id) {
        return Malformed(path, "questions not sorted or duplicated");
      }
      out.questions.push_back(std::move(q));
    }
  } catch (const nlohmann::json::exception& e) {
    return Malformed(path, e.what());
  }
  return out;
}

absl::StatusOr<SimilarityScores> ParseSimilarity(std::string_view text) {
  const nlohmann::json json =
      nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (json.is_discarded() || !json.is_object()) {
    return absl::InvalidArgumentError(
        "MalformedJson: similarity file must map question ids to objects");
  }
  SimilarityScores out;
  for (const auto& [qid, answers] : json.items()) {
    if (!answers.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat("MalformedJson: similarity for ", qid, " is not an object"));
    }
    for (const auto& [answer, score] : answers.items()) {
      if (!score.is_number()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "MalformedJson: similarity for ", qid, " is not numeric"));
      }
      out[qid][answer] = score.get<double>();
    }
  }
  return out;
}

}  // namespace biodenoise
