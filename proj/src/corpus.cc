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


#include "biodenoise/corpus.h"

#include <algorithm>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "biodenoise/text_util.h"

namespace biodenoise {

std::string JoinTitleBody(std::string_view title, std::string_view body) {
  return absl::StrCat(std::string(title), " ", std::string(body));
}

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOffsetOutOfBounds:
      return "OffsetOutOfBounds";
    case ViolationKind::kSurfaceMismatch:
      return "SurfaceMismatch";
    case ViolationKind::kLengthMismatch:
      return "LengthMismatch";
    case ViolationKind::kEmptySurface:
      return "EmptySurface";
    case ViolationKind::kEmptyType:
      return "EmptyType";
    case ViolationKind::kUnsorted:
      return "Unsorted";
    case ViolationKind::kDuplicateSpan:
      return "DuplicateSpan";
    case ViolationKind::kTextMismatch:
      return "TextMismatch";
    case ViolationKind::kInvalidUtf8:
      return "InvalidUtf8";
    case ViolationKind::kOverlapWarning:
      return "OverlapWarning";
  }
  return "Unknown";
}

std::vector<Violation> ValidateDocument(const AnnotatedDocument& doc) {
  std::vector<Violation> out;
  if (!IsValidUtf8(doc.text)) {
    out.push_back({ViolationKind::kInvalidUtf8, Violation::kNoMention,
                   "text is not valid UTF-8"});
    return out;
  }
  if (doc.text != JoinTitleBody(doc.title, doc.body)) {
    out.push_back({ViolationKind::kTextMismatch, Violation::kNoMention,
                   "text differs from title + ' ' + body"});
  }
  const Utf8Index index(doc.text);
  const size_t length = index.size();
  for (size_t i = 0; i < doc.mentions.size(); ++i) {
    const EntityMention& m = doc.mentions[i];
    if (m.surface.empty()) {
      out.push_back({ViolationKind::kEmptySurface, i, "empty surface"});
    }
    if (m.entity_type.empty()) {
      out.push_back({ViolationKind::kEmptyType, i, "empty entity type"});
    }
    if (m.start >= m.end || m.end > length) {
      out.push_back({ViolationKind::kOffsetOutOfBounds, i,
                     absl::StrCat("[", m.start, ",", m.end,
                                  ") outside text of length ", length)});
      continue;
    }
    if (m.end - m.start != CharLength(m.surface)) {
      out.push_back({ViolationKind::kLengthMismatch, i,
                     absl::StrCat("span length ", m.end - m.start,
                                  " != surface length ",
                                  CharLength(m.surface))});
    }
    if (index.Slice(m.start, m.end) != m.surface) {
      out.push_back({ViolationKind::kSurfaceMismatch, i,
                     absl::StrCat("text slice '", std::string(index.Slice(m.start, m.end)),
                                  "' != surface '", m.surface, "'")});
    }
    if (i > 0) {
      const EntityMention& prev = doc.mentions[i - 1];
      const auto key = std::tie(m.start, m.end);
      const auto prev_key = std::tie(prev.start, prev.end);
      if (key < prev_key) {
        out.push_back({ViolationKind::kUnsorted, i, "mentions out of order"});
      } else if (key == prev_key) {
        out.push_back({ViolationKind::kDuplicateSpan, i,
                       absl::StrCat("span [", m.start, ",", m.end,
                                    ") repeated")});
      }
    }
  }
  for (size_t i = 0; i < doc.mentions.size(); ++i) {
    for (size_t j = i + 1; j < doc.mentions.size(); ++j) {
      const EntityMention& a = doc.mentions[i];
      const EntityMention& b = doc.mentions[j];
      if (a.start == b.start && a.end == b.end) continue;
      if (a.start < b.end && b.start < a.end) {
        out.push_back({ViolationKind::kOverlapWarning, j,
                       absl::StrCat("overlaps mention ", i)});
      }
    }
  }
  return out;
}

std::vector<bool> OverlapMask(const AnnotatedDocument& doc) {
  const size_t n = doc.mentions.size();
  std::vector<bool> mask(n, false);
  // Sorted by start, so a sweep over the running max end finds all overlaps.
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&doc](size_t a, size_t b) {
    return std::tie(doc.mentions[a].start, doc.mentions[a].end) <
           std::tie(doc.mentions[b].start, doc.mentions[b].end);
  });
  size_t reach = 0;
  size_t reach_owner = 0;
  for (size_t k = 0; k < n; ++k) {
    const EntityMention& m = doc.mentions[order[k]];
    if (k > 0 && m.start < reach) {
      mask[order[k]] = true;
      mask[reach_owner] = true;
    }
    if (k == 0 || m.end > reach) {
      reach = m.end;
      reach_owner = order[k];
    }
  }
  return mask;
}

}  // namespace biodenoise
