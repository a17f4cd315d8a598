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


#include "biodenoise/pubtator.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "biodenoise/text_util.h"

namespace biodenoise {
namespace {

struct Line {
  size_t no;
  std::string text;
};

std::optional<size_t> ParseOffset(std::string_view field) {
  size_t value = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) return std::nullopt;
  return value;
}

// Splits "<id>|<tag>|<payload>". Returns false if the line is not a header
// with the expected tag.
bool SplitHeader(std::string_view line, char tag, std::string_view* id,
                 std::string_view* payload) {
  const size_t bar = line.find('|');
  if (bar == std::string_view::npos || bar == 0) return false;
  if (line.size() < bar + 3 || line[bar + 1] != tag || line[bar + 2] != '|') {
    return false;
  }
  *id = line.substr(0, bar);
  *payload = line.substr(bar + 3);
  return true;
}

class BlockParser {
 public:
  explicit BlockParser(PubtatorParseResult* result) : result_(result) {}

  void Parse(const std::vector<Line>& block) {
    std::string_view id;
    std::string_view title;
    std::string_view id_a;
    std::string_view body;
    if (!SplitHeader(block[0].text, 't', &id, &title)) {
      Diagnose(DiagnosticKind::kMalformedLine, block[0].no, "",
               "expected '<doc_id>|t|<title>'");
      return;
    }
    if (block.size() < 2 || !SplitHeader(block[1].text, 'a', &id_a, &body)) {
      Diagnose(DiagnosticKind::kMalformedLine,
               block.size() < 2 ? block[0].no : block[1].no, std::string(id),
               "expected '<doc_id>|a|<abstract>'");
      return;
    }
    if (id_a != id) {
      Diagnose(DiagnosticKind::kMalformedLine, block[1].no, std::string(id),
               absl::StrCat("abstract id '", std::string(id_a), "' != title id"));
      return;
    }
    if (!IsValidUtf8(title) || !IsValidUtf8(body)) {
      Diagnose(DiagnosticKind::kMalformedLine, block[0].no, std::string(id),
               "invalid UTF-8");
      return;
    }
    AnnotatedDocument doc;
    doc.doc_id = std::string(id);
    doc.title = std::string(title);
    doc.body = std::string(body);
    doc.text = JoinTitleBody(title, body);
    if (TrimSpace(doc.text).empty()) {
      Diagnose(DiagnosticKind::kEmptyDocument, block[0].no, doc.doc_id,
               "title and abstract are empty");
      return;
    }
    const Utf8Index index(doc.text);
    for (size_t i = 2; i < block.size(); ++i) {
      ParseAnnotation(block[i], index, &doc);
    }
    std::stable_sort(doc.mentions.begin(), doc.mentions.end(),
                     [](const EntityMention& a, const EntityMention& b) {
                       return std::tie(a.start, a.end) <
                              std::tie(b.start, b.end);
                     });
    result_->documents.push_back(std::move(doc));
  }

 private:
  void Diagnose(DiagnosticKind kind, size_t line_no, std::string doc_id,
                std::string reason) {
    result_->diagnostics.push_back(
        {kind, line_no, std::move(doc_id), std::move(reason)});
  }

  void ParseAnnotation(const Line& line, const Utf8Index& index,
                       AnnotatedDocument* doc) {
    const std::vector<std::string> fields = absl::StrSplit(
        absl::string_view(line.text.data(), line.text.size()), '\t');
    if (fields.size() < 5 || fields.size() > 6) {
      Diagnose(DiagnosticKind::kMalformedLine, line.no, doc->doc_id,
               absl::StrCat("expected 5 or 6 tab-separated fields, got ",
                            fields.size()));
      return;
    }
    if (fields[0] != doc->doc_id) {
      Diagnose(DiagnosticKind::kMalformedLine, line.no, doc->doc_id,
               absl::StrCat("annotation id '", std::string(fields[0]),
                            "' != block id"));
      return;
    }
    const std::optional<size_t> start = ParseOffset(fields[1]);
    const std::optional<size_t> end = ParseOffset(fields[2]);
    if (!start || !end) {
      Diagnose(DiagnosticKind::kMalformedLine, line.no, doc->doc_id,
               "offsets are not non-negative integers");
      return;
    }
    if (*start >= *end || *end > index.size()) {
      Diagnose(DiagnosticKind::kOffsetOutOfBounds, line.no, doc->doc_id,
               absl::StrCat("[", *start, ",", *end, ") outside text of length ",
                            index.size()));
      return;
    }
    const std::string_view surface = fields[3];
    if (!IsValidUtf8(surface) || index.Slice(*start, *end) != surface) {
      Diagnose(DiagnosticKind::kMalformedLine, line.no, doc->doc_id,
               "surface mismatch");
      return;
    }
    if (fields[4].empty()) {
      Diagnose(DiagnosticKind::kMalformedLine, line.no, doc->doc_id,
               "empty entity type");
      return;
    }
    for (const EntityMention& m : doc->mentions) {
      if (m.start == *start && m.end == *end) {
        Diagnose(DiagnosticKind::kMalformedLine, line.no, doc->doc_id,
                 "duplicate span");
        return;
      }
    }
    EntityMention mention;
    mention.start = *start;
    mention.end = *end;
    mention.surface = std::string(surface);
    mention.entity_type = std::string(fields[4]);
    if (fields.size() == 6) mention.norm_id = std::string(fields[5]);
    doc->mentions.push_back(std::move(mention));
  }

  PubtatorParseResult* result_;
};

}  // namespace

std::string_view DiagnosticKindName(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::kMalformedLine:
      return "MalformedLine";
    case DiagnosticKind::kOffsetOutOfBounds:
      return "OffsetOutOfBounds";
    case DiagnosticKind::kEmptyDocument:
      return "EmptyDocument";
  }
  return "Unknown";
}

std::string ParseDiagnostic::ToString() const {
  return absl::StrCat(std::string(DiagnosticKindName(kind)), " at line ", line_no,
                      doc_id.empty() ? "" : absl::StrCat(" (", doc_id, ")"),
                      ": ", reason);
}

absl::StatusOr<PubtatorParseResult> ParsePubtator(std::istream& in) {
  PubtatorParseResult result;
  BlockParser parser(&result);
  std::vector<Line> block;
  std::string text;
  size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) {
      if (!block.empty()) parser.Parse(block);
      block.clear();
      continue;
    }
    block.push_back({line_no, std::move(text)});
    text.clear();
  }
  if (in.bad()) {
    return absl::DataLossError(
        absl::StrCat("read error after line ", line_no));
  }
  if (!block.empty()) parser.Parse(block);
  return result;
}

PubtatorParseResult ParsePubtatorString(std::string_view data) {
  std::istringstream in{std::string(data)};
  return *ParsePubtator(in);
}

std::string FormatPubtatorBlock(const AnnotatedDocument& doc) {
  std::string out = absl::StrCat(doc.doc_id, "|t|", doc.title, "\n", doc.doc_id,
                                 "|a|", doc.body, "\n");
  for (const EntityMention& m : doc.mentions) {
    absl::StrAppend(&out, doc.doc_id, "\t", m.start, "\t", m.end, "\t",
                    m.surface, "\t", m.entity_type, "\t", m.norm_id, "\n");
  }
  return out;
}

std::string FormatPubtator(std::span<const AnnotatedDocument> docs) {
  std::string out;
  for (size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out += "\n";
    out += FormatPubtatorBlock(docs[i]);
  }
  return out;
}

}  // namespace biodenoise
