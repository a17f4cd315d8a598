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


#include "biodenoise/corruption.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "biodenoise/text_util.h"

namespace biodenoise {

absl::StatusOr<CorruptedContext> CorruptMention(const AnnotatedDocument& doc,
                                                size_t mention_index,
                                                const EntitySurface& replacement) {
  return CorruptMentions(doc, {mention_index}, replacement);
}

absl::StatusOr<CorruptedContext> CorruptMentions(
    const AnnotatedDocument& doc, const std::vector<size_t>& mention_indices,
    const EntitySurface& replacement) {
  if (mention_indices.empty()) {
    return absl::InvalidArgumentError("no mention to corrupt");
  }
  if (replacement.surface.empty()) {
    return absl::InvalidArgumentError("empty replacement surface");
  }
  const std::vector<bool> overlapped = OverlapMask(doc);
  std::vector<bool> selected(doc.mentions.size(), false);
  for (size_t index : mention_indices) {
    if (index >= doc.mentions.size()) {
      return absl::OutOfRangeError(
          absl::StrCat("IndexOutOfRange: mention ", index, " of ",
                       doc.mentions.size(), " in ", doc.doc_id));
    }
    if (overlapped[index]) {
      return absl::FailedPreconditionError(absl::StrCat(
          "OverlappedMention: mention ", index, " in ", doc.doc_id));
    }
    selected[index] = true;
  }

  const size_t primary = mention_indices.front();
  const size_t replacement_len = CharLength(replacement.surface);
  const Utf8Index index(doc.text);

  CorruptedContext out;
  out.original_surface = doc.mentions[primary].surface;
  out.replacement_surface = replacement.surface;
  out.source_doc_id = doc.doc_id;
  out.source_mention_index = primary;
  out.text.reserve(doc.text.size() + replacement.surface.size());

  // Mentions are sorted by start and the selected ones overlap nothing, so
  // one left-to-right pass splices and re-bases everything.
  size_t cursor = 0;
  long long shift = 0;
  for (size_t i = 0; i < doc.mentions.size(); ++i) {
    const EntityMention& m = doc.mentions[i];
    EntityMention rebased = m;
    rebased.start = static_cast<size_t>(static_cast<long long>(m.start) + shift);
    if (selected[i]) {
      out.text.append(index.Slice(cursor, m.start));
      out.text.append(replacement.surface);
      cursor = m.end;
      rebased.end = rebased.start + replacement_len;
      rebased.surface = replacement.surface;
      if (!replacement.norm_id.empty()) rebased.norm_id = replacement.norm_id;
      const CharSpan span{rebased.start, rebased.end};
      out.replaced_spans.push_back(span);
      if (i == primary) out.corrupted_span = span;
      shift += static_cast<long long>(replacement_len) -
               static_cast<long long>(m.end - m.start);
    } else {
      rebased.end = static_cast<size_t>(static_cast<long long>(m.end) + shift);
    }
    out.mentions.push_back(std::move(rebased));
  }
  out.text.append(index.Slice(cursor, index.size()));
  return out;
}

}  // namespace biodenoise
