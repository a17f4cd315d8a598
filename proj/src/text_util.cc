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


#include "biodenoise/text_util.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstdio>

namespace biodenoise {
namespace {

template <typename Fn>
bool ForEachCodePoint(std::string_view text, Fn&& fn) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) return false;
    fn(static_cast<char32_t>(c), static_cast<size_t>(start));
  }
  return true;
}

}  // namespace

bool IsValidUtf8(std::string_view text) {
  return ForEachCodePoint(text, [](char32_t, size_t) {});
}

size_t CharLength(std::string_view text) {
  size_t n = 0;
  ForEachCodePoint(text, [&n](char32_t, size_t) { ++n; });
  return n;
}

std::u32string ToUtf32(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  ForEachCodePoint(text, [&out](char32_t c, size_t) { out.push_back(c); });
  return out;
}

std::string ToUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
  }
  return out;
}

Utf8Index::Utf8Index(std::string_view text) : text_(text) {
  boundaries_.reserve(text.size() + 1);
  ForEachCodePoint(text,
                   [this](char32_t, size_t start) { boundaries_.push_back(start); });
  boundaries_.push_back(text.size());
}

std::string_view Utf8Index::Slice(size_t start, size_t end) const {
  const size_t from = boundaries_[start];
  return text_.substr(from, boundaries_[end] - from);
}

std::u32string FoldCase32(std::string_view text) {
  std::u32string out = ToUtf32(text);
  for (char32_t& c : out) {
    c = static_cast<char32_t>(
        u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
  }
  return out;
}

std::string FoldCase(std::string_view text) { return ToUtf8(FoldCase32(text)); }

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return FoldCase32(a) == FoldCase32(b);
}

std::optional<size_t> FindIgnoreCase(std::string_view haystack,
                                     std::string_view needle) {
  const std::u32string folded_needle = FoldCase32(needle);
  if (folded_needle.empty()) return std::nullopt;
  const size_t pos = FoldCase32(haystack).find(folded_needle);
  if (pos == std::u32string::npos) return std::nullopt;
  return pos;
}

bool ContainsIgnoreCase(std::string_view haystack, std::string_view needle) {
  return FindIgnoreCase(haystack, needle).has_value();
}

bool IsSpaceChar(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

std::string_view TrimSpace(std::string_view text) {
  const std::u32string chars = ToUtf32(text);
  size_t first = 0;
  size_t last = chars.size();
  while (first < last && IsSpaceChar(chars[first])) ++first;
  while (last > first && IsSpaceChar(chars[last - 1])) --last;
  const Utf8Index index(text);
  return index.Slice(first, last);
}

uint64_t StableHash(const std::vector<std::string_view>& parts) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  for (std::string_view part : parts) {
    for (char c : part) mix(static_cast<uint8_t>(c));
    mix(0x1f);
  }
  return h;
}

std::string HexU64(uint64_t value, int digits) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return std::string(buf + (16 - digits), static_cast<size_t>(digits));
}

}  // namespace biodenoise
