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


#ifndef BIODENOISE_PUBTATOR_H_
#define BIODENOISE_PUBTATOR_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/corpus.h"

namespace biodenoise {

// PubTator block format:
//
//   <doc_id>|t|<title>
//   <doc_id>|a|<abstract>
//   <doc_id>\t<start>\t<end>\t<surface>\t<type>\t<norm_id>
//   ...
//   <blank line>
//
// Offsets are code point offsets into "<title> <abstract>".

enum class DiagnosticKind {
  kMalformedLine,
  kOffsetOutOfBounds,
  kEmptyDocument,
};

std::string_view DiagnosticKindName(DiagnosticKind kind);

// A rejected line or block. Parsing continues past every diagnostic; the
// offending annotation line (or the whole block, for header problems) is
// dropped.
struct ParseDiagnostic {
  DiagnosticKind kind;
  size_t line_no;  // 1-based
  std::string doc_id;
  std::string reason;

  std::string ToString() const;
};

struct PubtatorParseResult {
  std::vector<AnnotatedDocument> documents;
  std::vector<ParseDiagnostic> diagnostics;
};

// Fails only when the stream itself cannot be read.
absl::StatusOr<PubtatorParseResult> ParsePubtator(std::istream& in);
PubtatorParseResult ParsePubtatorString(std::string_view data);

// Serializes one block, terminated by a newline but without the separating
// blank line.
std::string FormatPubtatorBlock(const AnnotatedDocument& doc);

// Blocks joined by one blank line. Parsing the result yields `docs` again.
std::string FormatPubtator(std::span<const AnnotatedDocument> docs);

}  // namespace biodenoise

#endif  // BIODENOISE_PUBTATOR_H_
