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


#ifndef BIODENOISE_CORPUS_H_
#define BIODENOISE_CORPUS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace biodenoise {

// A typed entity mention. Offsets are code point offsets into
// AnnotatedDocument::text, end exclusive.
struct EntityMention {
  size_t start = 0;
  size_t end = 0;
  std::string surface;
  std::string entity_type;
  std::string norm_id;

  bool operator==(const EntityMention&) const = default;
};

// Title and body of one abstract or snippet plus its mentions. `text` is
// always JoinTitleBody(title, body) and mention offsets index it.
struct AnnotatedDocument {
  std::string doc_id;
  std::string title;
  std::string body;
  std::string text;
  std::vector<EntityMention> mentions;

  bool operator==(const AnnotatedDocument&) const = default;
};

struct SentenceSpan {
  size_t start = 0;
  size_t end = 0;

  bool operator==(const SentenceSpan&) const = default;
};

// The canonical context text: title, one space, body.
std::string JoinTitleBody(std::string_view title, std::string_view body);

enum class ViolationKind {
  kOffsetOutOfBounds,
  kSurfaceMismatch,
  kLengthMismatch,
  kEmptySurface,
  kEmptyType,
  kUnsorted,
  kDuplicateSpan,
  kTextMismatch,
  kInvalidUtf8,
  // Not an invariant breach: overlapping mentions are kept but flagged.
  kOverlapWarning,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // Index of the offending mention, or kNoMention for document-level issues.
  size_t mention_index;
  std::string detail;

  static constexpr size_t kNoMention = static_cast<size_t>(-1);

  bool fatal() const { return kind != ViolationKind::kOverlapWarning; }
};

// Checks every AnnotatedDocument / EntityMention invariant. Returns an empty
// list for a well-formed document without overlapping mentions.
std::vector<Violation> ValidateDocument(const AnnotatedDocument& doc);

// mask[i] is true when mention i shares at least one character with another
// mention. Generators never corrupt such mentions.
std::vector<bool> OverlapMask(const AnnotatedDocument& doc);

}  // namespace biodenoise

#endif  // BIODENOISE_CORPUS_H_
