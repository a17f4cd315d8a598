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


#ifndef BIODENOISE_CORRUPTION_H_
#define BIODENOISE_CORRUPTION_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/corpus.h"
#include "biodenoise/entity_catalog.h"

namespace biodenoise {

struct CharSpan {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool operator==(const CharSpan&) const = default;
};

// A document with one or more mentions swapped for a replacement surface.
//
//   text[corrupted_span] == replacement_surface
//   writing original_surface back over every span in `replaced_spans`
//   reproduces the source document text.
struct CorruptedContext {
  std::string text;
  CharSpan corrupted_span;
  // Every replaced occurrence, ascending. Holds only corrupted_span unless
  // several mentions were corrupted together.
  std::vector<CharSpan> replaced_spans;
  std::string original_surface;
  std::string replacement_surface;
  std::string source_doc_id;
  size_t source_mention_index = 0;
  // The source mentions re-based onto `text`; corrupted mentions carry the
  // replacement surface.
  std::vector<EntityMention> mentions;
};

// Splices `replacement` over mention `mention_index`. Later offsets shift by
// len(replacement) - len(original). Errors: OutOfRange ("IndexOutOfRange")
// and FailedPrecondition ("OverlappedMention").
absl::StatusOr<CorruptedContext> CorruptMention(const AnnotatedDocument& doc,
                                                size_t mention_index,
                                                const EntitySurface& replacement);

// Corrupts several mentions at once with the same replacement. The first
// index is the primary span reported as corrupted_span.
absl::StatusOr<CorruptedContext> CorruptMentions(
    const AnnotatedDocument& doc, const std::vector<size_t>& mention_indices,
    const EntitySurface& replacement);

}  // namespace biodenoise

#endif  // BIODENOISE_CORRUPTION_H_
