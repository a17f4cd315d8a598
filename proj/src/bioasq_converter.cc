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


#include "biodenoise/bioasq_converter.h"

#include <algorithm>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "biodenoise/text_util.h"

namespace biodenoise {
namespace {

absl::Status Malformed(std::string_view where, std::string_view why) {
  return absl::InvalidArgumentError(
      absl::StrCat("MalformedJson: ", std::string(where), ": ", std::string(why)));
}

// Factoid answers arrive either as ["a", "b"] or [["a", "b"]]; both mean one
// item with synonyms a and b.
std::vector<std::string> FlattenStrings(const nlohmann::json& value) {
  std::vector<std::string> out;
  if (value.is_string()) {
    out.push_back(value.get<std::string>());
  } else if (value.is_array()) {
    for (const nlohmann::json& v : value) {
      for (std::string& s : FlattenStrings(v)) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<std::string> NonEmpty(std::vector<std::string> variants) {
  std::erase_if(variants, [](const std::string& s) {
    return TrimSpace(s).empty();
  });
  return variants;
}

// First alignable variant of the item, as a context-cased answer.
std::optional<Answer> AlignItem(const std::string& context,
                                const std::vector<std::string>& variants) {
  for (const std::string& variant : variants) {
    const std::string_view trimmed = TrimSpace(variant);
    const std::optional<size_t> pos = FindIgnoreCase(context, trimmed);
    if (!pos) continue;
    const Utf8Index index(context);
    return Answer{std::string(index.Slice(*pos, *pos + CharLength(trimmed))),
                  *pos};
  }
  return std::nullopt;
}

}  // namespace

std::string_view ContextSourceName(ContextSource source) {
  return source == ContextSource::kSnippet ? "snippet" : "abstract";
}

std::optional<ContextSource> ParseContextSource(std::string_view name) {
  if (name == "snippet") return ContextSource::kSnippet;
  if (name == "abstract") return ContextSource::kAbstract;
  return std::nullopt;
}

std::string PmidFromDocumentUrl(std::string_view url) {
  while (!url.empty() && url.back() == '/') url.remove_suffix(1);
  const size_t slash = url.rfind('/');
  return std::string(slash == std::string_view::npos ? url
                                                     : url.substr(slash + 1));
}

absl::StatusOr<std::vector<BioasqQuestion>> ParseBioasq(
    std::string_view json_text) {
  const nlohmann::json json =
      nlohmann::json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (json.is_discarded()) return Malformed("<root>", "not valid JSON");
  if (!json.is_object() || !json.contains("questions") ||
      !json["questions"].is_array()) {
    return Malformed("<root>", "expected {\"questions\": [...]}");
  }
  std::vector<BioasqQuestion> out;
  size_t position = 0;
  for (const nlohmann::json& q : json["questions"]) {
    const std::string where = absl::StrCat("questions[", position++, "]");
    if (!q.is_object()) return Malformed(where, "not an object");
    for (const char* key : {"id", "type", "body"}) {
      if (!q.contains(key) || !q[key].is_string()) {
        return Malformed(where, absl::StrCat("missing string field '", key, "'"));
      }
    }
    BioasqQuestion question;
    question.id = q["id"].get<std::string>();
    question.type = q["type"].get<std::string>();
    question.body = q["body"].get<std::string>();
    if (question.type != "yesno" && question.type != "factoid" &&
        question.type != "list" && question.type != "summary") {
      return Malformed(where, absl::StrCat("unknown type '", question.type, "'"));
    }
    if (q.contains("snippets")) {
      if (!q["snippets"].is_array()) return Malformed(where, "snippets not an array");
      for (const nlohmann::json& s : q["snippets"]) {
        if (!s.is_object() || !s.contains("text") || !s["text"].is_string()) {
          return Malformed(where, "snippet without text");
        }
        question.snippets.push_back(
            {s["text"].get<std::string>(),
             PmidFromDocumentUrl(s.value("document", ""))});
      }
    }
    if (q.contains("documents")) {
      if (!q["documents"].is_array()) {
        return Malformed(where, "documents not an array");
      }
      for (const nlohmann::json& d : q["documents"]) {
        if (!d.is_string()) return Malformed(where, "document is not a string");
        question.documents.push_back(PmidFromDocumentUrl(d.get<std::string>()));
      }
    }
    if (q.contains("exact_answer") && question.type != "summary") {
      const nlohmann::json& exact = q["exact_answer"];
      question.has_exact_answer = true;
      if (question.type == "yesno") {
        if (!exact.is_string()) return Malformed(where, "yes/no answer not a string");
        question.yesno_answer =
            ParseYesNo(absl::AsciiStrToLower(std::string(TrimSpace(exact.get<std::string>()))));
        if (!question.yesno_answer) {
          return Malformed(where, "yes/no answer is neither yes nor no");
        }
      } else if (question.type == "factoid") {
        std::vector<std::string> variants = NonEmpty(FlattenStrings(exact));
        if (variants.empty()) return Malformed(where, "empty factoid answer");
        question.answer_items.push_back(std::move(variants));
      } else {
        if (!exact.is_array()) return Malformed(where, "list answer not an array");
        for (const nlohmann::json& item : exact) {
          std::vector<std::string> variants = NonEmpty(FlattenStrings(item));
          if (!variants.empty()) question.answer_items.push_back(std::move(variants));
        }
        if (question.answer_items.empty()) {
          return Malformed(where, "empty list answer");
        }
      }
    }
    out.push_back(std::move(question));
  }
  return out;
}

absl::StatusOr<DatasetFile> ConvertBioasq(std::string_view json_text,
                                          const BioasqConvertOptions& options) {
  absl::StatusOr<std::vector<BioasqQuestion>> questions = ParseBioasq(json_text);
  if (!questions.ok()) return questions.status();
  if (options.context_source == ContextSource::kAbstract &&
      options.abstracts == nullptr) {
    return absl::FailedPreconditionError(
        "abstract contexts need an abstracts corpus");
  }

  std::map<std::string, size_t> by_type = {
      {"factoid", 0}, {"list", 0}, {"summary", 0}, {"yesno", 0}};
  size_t unalignable = 0;
  size_t missing_abstracts = 0;
  size_t without_context = 0;
  std::vector<QAExample> examples;
  std::set<std::string> ids;

  for (const BioasqQuestion& q : *questions) {
    ++by_type[q.type];
    if (q.type == "summary") continue;
    if (!ids.insert(q.id).second) {
      return Malformed(q.id, "duplicate question id");
    }

    // (context id, text) pairs in source order.
    std::vector<std::pair<std::string, std::string>> contexts;
    if (options.context_source == ContextSource::kSnippet) {
      for (const BioasqSnippet& s : q.snippets) {
        if (!TrimSpace(s.text).empty()) contexts.emplace_back(s.document, s.text);
      }
    } else {
      std::set<std::string> seen;
      for (const std::string& pmid : q.documents) {
        if (!seen.insert(pmid).second) continue;
        auto it = options.abstracts->find(pmid);
        if (it == options.abstracts->end()) {
          if (!options.skip_missing_abstracts) {
            return absl::FailedPreconditionError(
                absl::StrCat("MissingAbstract(", pmid, ") for question ", q.id));
          }
          ++missing_abstracts;
          continue;
        }
        contexts.emplace_back(pmid, it->second);
      }
    }
    if (contexts.empty()) ++without_context;

    const QuestionType type = *ParseQuestionType(q.type);
    nlohmann::json variants = nlohmann::json::array();
    for (const auto& item : q.answer_items) variants.push_back(item);

    for (size_t c = 0; c < contexts.size(); ++c) {
      const auto& [context_id, text] = contexts[c];
      QAExample ex;
      const std::string index = std::to_string(c);
      ex.id = MakeExampleId(q.id, c,
                            {q.id, ContextSourceName(options.context_source),
                             context_id, index});
      ex.question_type = type;
      ex.question = q.body;
      ex.context = text;
      ex.provenance = Provenance::kBioasq;
      ex.meta = {{"question_id", q.id},
                 {"context_source", ContextSourceName(options.context_source)},
                 {"context_id", context_id},
                 {"context_index", c},
                 {"has_gold", q.has_exact_answer}};
      if (type == QuestionType::kYesNo) {
        ex.yesno_label = q.yesno_answer;
      } else if (q.has_exact_answer) {
        ex.meta["answer_variants"] = variants;
        for (const auto& item : q.answer_items) {
          if (std::optional<Answer> a = AlignItem(text, item)) {
            const bool duplicate = std::any_of(
                ex.answers.begin(), ex.answers.end(), [&a](const Answer& b) {
                  return b.answer_start == a->answer_start && b.text == a->text;
                });
            if (!duplicate) ex.answers.push_back(*std::move(a));
          }
        }
        ex.meta["unalignable"] = ex.answers.empty();
        if (ex.answers.empty()) ++unalignable;
      }
      examples.push_back(std::move(ex));
    }
  }

  size_t total = 0;
  for (const auto& [type, n] : by_type) total += n;
  nlohmann::json source_stats = {
      {"questions", by_type},
      {"questions_total", total},
      {"context_source", ContextSourceName(options.context_source)},
      {"unalignable", unalignable},
      {"missing_abstracts", missing_abstracts},
      {"questions_without_context", without_context}};
  return MakeDataset(std::move(examples), std::move(source_stats));
}

}  // namespace biodenoise
