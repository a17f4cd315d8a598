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


#include "biodenoise/evaluation.h"

#include <map>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace biodenoise {
namespace {

absl::Status IdMismatch(std::string_view why) {
  return absl::InvalidArgumentError(absl::StrCat("IdMismatch: ", std::string(why)));
}

YesNo Flip(YesNo label) { return label == YesNo::kYes ? YesNo::kNo : YesNo::kYes; }

nlohmann::json RowToJson(const QuestionRow& row) {
  nlohmann::json j = {{"question_id", row.question_id},
                      {"question_type", QuestionTypeName(row.question_type)},
                      {"missing", row.missing}};
  switch (row.question_type) {
    case QuestionType::kFactoid:
      j["predictions"] = row.predictions;
      j["rank"] = row.rank ? nlohmann::json(*row.rank) : nlohmann::json(nullptr);
      break;
    case QuestionType::kList:
      j["predictions"] = row.predictions;
      j["precision"] = row.precision;
      j["recall"] = row.recall;
      j["f1"] = row.f1;
      break;
    case QuestionType::kYesNo:
      j["gold"] = YesNoName(*row.gold_label);
      j["predicted"] = row.predicted_label ? nlohmann::json(YesNoName(*row.predicted_label))
                                           : nlohmann::json(nullptr);
      break;
  }
  return j;
}

}  // namespace

std::vector<AnswerVariants> GoldItems(const std::vector<const QAExample*>& examples) {
  std::vector<AnswerVariants> items;
  if (examples.empty()) return items;
  const nlohmann::json& meta = examples.front()->meta;
  if (meta.is_object() && meta.contains("answer_variants") &&
      meta["answer_variants"].is_array()) {
    for (const nlohmann::json& item : meta["answer_variants"]) {
      AnswerVariants variants;
      if (item.is_array()) {
        for (const nlohmann::json& v : item) {
          if (v.is_string()) variants.push_back(v.get<std::string>());
        }
      } else if (item.is_string()) {
        variants.push_back(item.get<std::string>());
      }
      if (!variants.empty()) items.push_back(std::move(variants));
    }
    if (examples.front()->question_type == QuestionType::kFactoid &&
        items.size() > 1) {
      AnswerVariants all;
      for (AnswerVariants& item : items) {
        for (std::string& v : item) all.push_back(std::move(v));
      }
      items = {std::move(all)};
    }
    return items;
  }
  std::map<std::string, size_t> by_norm;
  for (const QAExample* ex : examples) {
    for (const Answer& a : ex->answers) {
      const std::string norm = NormalizeAnswer(a.text);
      const bool factoid = ex->question_type == QuestionType::kFactoid;
      const std::string key = factoid ? std::string() : norm;
      auto [it, inserted] = by_norm.try_emplace(key, items.size());
      if (inserted) items.emplace_back();
      AnswerVariants& item = items[it->second];
      if (std::find(item.begin(), item.end(), a.text) == item.end()) {
        item.push_back(a.text);
      }
    }
  }
  return items;
}

absl::StatusOr<EvaluationReport> Evaluate(const DatasetFile& dataset,
                                          const DecodedFile& decoded,
                                          const EvaluationOptions& options) {
  if (options.mrr_window == 0) {
    return absl::InvalidArgumentError("mrr_window must be >= 1");
  }
  std::map<std::string, std::vector<const QAExample*>> questions;
  for (const QAExample& ex : dataset.examples) {
    questions[QuestionKey(ex)].push_back(&ex);
  }
  std::map<std::string, const DecodedQuestion*> predicted;
  for (const DecodedQuestion& q : decoded.questions) {
    auto it = questions.find(q.question_id);
    if (it == questions.end()) {
      return IdMismatch(absl::StrCat("decoded question '", q.question_id,
                                     "' is not in the dataset"));
    }
    if (it->second.front()->question_type != q.question_type) {
      return IdMismatch(absl::StrCat("question '", q.question_id,
                                     "' has a different type in the dataset"));
    }
    predicted[q.question_id] = &q;
  }

  EvaluationReport report;
  report.mrr_window = options.mrr_window;
  std::vector<std::optional<size_t>> ranks;
  std::vector<ListQuestionScore> list_scores;
  std::vector<YesNo> gold_labels, predicted_labels;

  for (const auto& [qid, examples] : questions) {
    const QuestionType type = examples.front()->question_type;
    bool has_gold = true;
    for (const QAExample* ex : examples) has_gold = has_gold && HasGold(*ex);
    QuestionRow row;
    row.question_id = qid;
    row.question_type = type;
    auto it = predicted.find(qid);
    const DecodedQuestion* pred = it == predicted.end() ? nullptr : it->second;
    row.missing = pred == nullptr;
    if (pred != nullptr) {
      for (const DecodedAnswer& a : pred->answers) row.predictions.push_back(a.text);
    }

    if (type == QuestionType::kYesNo) {
      std::optional<YesNo> gold;
      for (const QAExample* ex : examples) {
        if (ex->yesno_label) {
          gold = ex->yesno_label;
          break;
        }
      }
      if (!has_gold || !gold) {
        ++report.questions_without_gold;
        continue;
      }
      row.gold_label = gold;
      row.predicted_label = pred ? pred->label : std::nullopt;
      gold_labels.push_back(*gold);
      predicted_labels.push_back(row.predicted_label ? *row.predicted_label
                                                     : Flip(*gold));
    } else {
      const std::vector<AnswerVariants> gold = GoldItems(examples);
      if (!has_gold || gold.empty()) {
        ++report.questions_without_gold;
        continue;
      }
      if (type == QuestionType::kFactoid) {
        row.rank = FirstMatchRank(gold.front(), row.predictions, options.mrr_window);
        ranks.push_back(row.rank);
      } else {
        const ListQuestionScore s = ScoreListQuestion(gold, row.predictions);
        row.precision = s.precision;
        row.recall = s.recall;
        row.f1 = s.f1;
        list_scores.push_back(s);
      }
    }
    if (row.missing) report.flags.push_back(absl::StrCat("MissingPrediction(", qid, ")"));
    report.rows.push_back(std::move(row));
  }

  report.factoid = FactoidMetrics(ranks, options.mrr_window);
  report.list = ListMetrics(list_scores);
  absl::StatusOr<YesNoScores> yesno = YesNoMetrics(gold_labels, predicted_labels);
  if (!yesno.ok()) return yesno.status();
  report.yesno = *std::move(yesno);
  if (report.yesno.n > 0) {
    for (const std::string& label : report.yesno.absent_classes) {
      report.flags.push_back(absl::StrCat("AbsentClass(", label, ")"));
    }
  }
  return report;
}

nlohmann::json EvaluationReport::ToJson() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const QuestionRow& row : rows) rows_json.push_back(RowToJson(row));
  return {
      {"version", kReportVersion},
      {"mrr_window", mrr_window},
      {"factoid",
       {{"sacc", factoid.sacc}, {"lacc", factoid.lacc}, {"mrr", factoid.mrr},
        {"n", factoid.n}}},
      {"list",
       {{"macro_precision", list.macro_precision},
        {"macro_recall", list.macro_recall},
        {"macro_f1", list.macro_f1},
        {"n", list.n}}},
      {"yesno",
       {{"acc", yesno.acc}, {"f1", yesno.f1}, {"f1_yes", yesno.f1_yes},
        {"f1_no", yesno.f1_no}, {"n", yesno.n},
        {"absent_classes", yesno.absent_classes}}},
      {"ranking",
       {{"yesno_acc", yesno.acc}, {"factoid_mrr", factoid.mrr},
        {"list_f1", list.macro_f1}}},
      {"questions_without_gold", questions_without_gold},
      {"flags", flags},
      {"per_question", std::move(rows_json)},
      {"run", run}};
}

absl::StatusOr<EvaluationReport> EvaluationReport::FromJson(
    const nlohmann::json& json) {
  EvaluationReport r;
  try {
    if (json.at("version").get<std::string>() != kReportVersion) {
      return absl::InvalidArgumentError("unsupported report version");
    }
    r.mrr_window = json.at("mrr_window").get<size_t>();
    const nlohmann::json& f = json.at("factoid");
    r.factoid = {f.at("sacc").get<double>(), f.at("lacc").get<double>(),
                 f.at("mrr").get<double>(), f.at("n").get<size_t>()};
    const nlohmann::json& l = json.at("list");
    r.list = {l.at("macro_precision").get<double>(),
              l.at("macro_recall").get<double>(), l.at("macro_f1").get<double>(),
              l.at("n").get<size_t>()};
    const nlohmann::json& y = json.at("yesno");
    r.yesno.acc = y.at("acc").get<double>();
    r.yesno.f1 = y.at("f1").get<double>();
    r.yesno.f1_yes = y.at("f1_yes").get<double>();
    r.yesno.f1_no = y.at("f1_no").get<double>();
    r.yesno.n = y.at("n").get<size_t>();
    r.yesno.absent_classes = y.at("absent_classes").get<std::vector<std::string>>();
    r.questions_without_gold = json.at("questions_without_gold").get<size_t>();
    r.flags = json.at("flags").get<std::vector<std::string>>();
    if (json.contains("run")) r.run = json["run"];
    for (const nlohmann::json& j : json.at("per_question")) {
      QuestionRow row;
      row.question_id = j.at("question_id").get<std::string>();
      const auto type = ParseQuestionType(j.at("question_type").get<std::string>());
      if (!type) return absl::InvalidArgumentError("unknown question_type");
      row.question_type = *type;
      row.missing = j.at("missing").get<bool>();
      switch (row.question_type) {
        case QuestionType::kFactoid:
          row.predictions = j.at("predictions").get<std::vector<std::string>>();
          if (!j.at("rank").is_null()) row.rank = j["rank"].get<size_t>();
          break;
        case QuestionType::kList:
          row.predictions = j.at("predictions").get<std::vector<std::string>>();
          row.precision = j.at("precision").get<double>();
          row.recall = j.at("recall").get<double>();
          row.f1 = j.at("f1").get<double>();
          break;
        case QuestionType::kYesNo:
          row.gold_label = ParseYesNo(j.at("gold").get<std::string>());
          if (!row.gold_label) return absl::InvalidArgumentError("bad gold label");
          if (!j.at("predicted").is_null()) {
            row.predicted_label = ParseYesNo(j["predicted"].get<std::string>());
          }
          break;
      }
      r.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("malformed report: ", e.what()));
  }
  return r;
}

std::string EvaluationReport::ToText() const {
  std::string out;
  absl::StrAppendFormat(&out, "%-8s %9s %9s %9s %6s\n", "Factoid", "SAcc", "LAcc",
                        "MRR", "n");
  absl::StrAppendFormat(&out, "%-8s %9.4f %9.4f %9.4f %6d\n\n", "", factoid.sacc,
                        factoid.lacc, factoid.mrr, factoid.n);
  absl::StrAppendFormat(&out, "%-8s %9s %9s %9s %6s\n", "List", "Precision",
                        "Recall", "MacroF1", "n");
  absl::StrAppendFormat(&out, "%-8s %9.4f %9.4f %9.4f %6d\n\n", "",
                        list.macro_precision, list.macro_recall, list.macro_f1,
                        list.n);
  absl::StrAppendFormat(&out, "%-8s %9s %9s %9s %9s %6s\n", "Yes/No", "Acc",
                        "F1", "F1-yes", "F1-no", "n");
  absl::StrAppendFormat(&out, "%-8s %9.4f %9.4f %9.4f %9.4f %6d\n\n", "",
                        yesno.acc, yesno.f1, yesno.f1_yes, yesno.f1_no, yesno.n);
  absl::StrAppendFormat(&out,
                        "Ranking: yes/no accuracy %.4f, factoid MRR %.4f, "
                        "list F1 %.4f\n",
                        yesno.acc, factoid.mrr, list.macro_f1);
  if (questions_without_gold > 0) {
    absl::StrAppendFormat(&out, "Questions without gold: %d\n",
                          questions_without_gold);
  }
  for (const std::string& flag : flags) absl::StrAppend(&out, "Flag: ", flag, "\n");
  return out;
}

bool operator==(const EvaluationReport& a, const EvaluationReport& b) {
  return a.ToJson() == b.ToJson();
}

std::string SerializeReport(const EvaluationReport& report) {
  return report.ToJson().dump(2) + "\n";
}

}  // namespace biodenoise
