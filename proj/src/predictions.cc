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


#include "biodenoise/predictions.h"

#include <cmath>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "biodenoise/file_util.h"
#include "json.hpp"

namespace biodenoise {
namespace {

absl::Status InvalidRecord(std::string_view path, size_t line,
                           std::string_view why) {
  return absl::InvalidArgumentError(
      absl::StrCat("InvalidRecord(", std::string(path), ":", line,
                   "): ", std::string(why)));
}

bool IsFiniteNumber(const nlohmann::json& j) {
  return j.is_number() && std::isfinite(j.get<double>());
}

bool IsIndex(const nlohmann::json& j) { return j.is_number_unsigned(); }

}  // namespace

absl::Status ValidateSpanRecord(const SpanPredictionRecord& record,
                                std::optional<size_t> context_chars) {
  if (record.tokens.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("record ", record.example_id, " has no tokens"));
  }
  size_t previous_end = 0;
  for (size_t i = 0; i < record.tokens.size(); ++i) {
    const TokenLogits& t = record.tokens[i];
    auto bad = [&](std::string_view why) {
      return absl::InvalidArgumentError(absl::StrCat(
          "record ", record.example_id, " token ", i, ": ", std::string(why)));
    };
    if (!std::isfinite(t.start_logit) || !std::isfinite(t.end_logit)) {
      return bad("non-finite logit");
    }
    if (t.char_start > t.char_end) return bad("char_start > char_end");
    if (t.char_start < previous_end) return bad("overlaps the previous token");
    if (context_chars && t.char_end > *context_chars) {
      return bad("outside the context");
    }
    previous_end = t.char_end;
  }
  return absl::OkStatus();
}

absl::StatusOr<PredictionFile> ParsePredictions(std::string_view text,
                                                std::string_view path) {
  PredictionFile out;
  std::set<std::string> seen;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text.remove_prefix(newline == std::string_view::npos ? text.size()
                                                         : newline + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const nlohmann::json j =
        nlohmann::json::parse(line.begin(), line.end(), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      return InvalidRecord(path, line_no, "not a JSON object");
    }
    if (!j.contains("example_id") || !j["example_id"].is_string()) {
      return InvalidRecord(path, line_no, "missing string field 'example_id'");
    }
    std::string id = j["example_id"].get<std::string>();
    if (!seen.insert(id).second) {
      return absl::InvalidArgumentError(absl::StrCat("DuplicateRecord(", id, ")"));
    }
    const bool has_tokens = j.contains("tokens");
    const bool has_logit = j.contains("logit");
    if (has_tokens == has_logit) {
      return InvalidRecord(path, line_no,
                           "expected exactly one of 'tokens' or 'logit'");
    }
    if (has_logit) {
      if (!IsFiniteNumber(j["logit"])) {
        return InvalidRecord(path, line_no, "'logit' is not a finite number");
      }
      out.yesno.push_back({std::move(id), j["logit"].get<double>()});
      continue;
    }
    if (!j["tokens"].is_array()) {
      return InvalidRecord(path, line_no, "'tokens' is not an array");
    }
    SpanPredictionRecord record;
    record.example_id = std::move(id);
    for (const nlohmann::json& t : j["tokens"]) {
      if (!t.is_object() || !t.contains("text") || !t["text"].is_string() ||
          !t.contains("char_start") || !IsIndex(t["char_start"]) ||
          !t.contains("char_end") || !IsIndex(t["char_end"]) ||
          !t.contains("start_logit") || !IsFiniteNumber(t["start_logit"]) ||
          !t.contains("end_logit") || !IsFiniteNumber(t["end_logit"])) {
        return InvalidRecord(path, line_no, "malformed token");
      }
      record.tokens.push_back({t["text"].get<std::string>(),
                               t["char_start"].get<size_t>(),
                               t["char_end"].get<size_t>(),
                               t["start_logit"].get<double>(),
                               t["end_logit"].get<double>()});
    }
    if (absl::Status s = ValidateSpanRecord(record); !s.ok()) {
      return InvalidRecord(path, line_no, std::string(s.message()));
    }
    out.span.push_back(std::move(record));
  }
  return out;
}

absl::StatusOr<PredictionFile> ReadPredictions(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  return ParsePredictions(*text, path);
}

std::string SerializePredictions(const PredictionFile& predictions) {
  std::string out;
  for (const SpanPredictionRecord& r : predictions.span) {
    nlohmann::json tokens = nlohmann::json::array();
    for (const TokenLogits& t : r.tokens) {
      tokens.push_back({{"text", t.text},
                        {"char_start", t.char_start},
                        {"char_end", t.char_end},
                        {"start_logit", t.start_logit},
                        {"end_logit", t.end_logit}});
    }
    absl::StrAppend(&out,
                    nlohmann::json{{"example_id", r.example_id},
                                   {"tokens", std::move(tokens)}}
                        .dump(),
                    "\n");
  }
  for (const YesNoPredictionRecord& r : predictions.yesno) {
    absl::StrAppend(
        &out,
        nlohmann::json{{"example_id", r.example_id}, {"logit", r.logit}}.dump(),
        "\n");
  }
  return out;
}

}  // namespace biodenoise
