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


#ifndef BIODENOISE_TEXT_UTIL_H_
#define BIODENOISE_TEXT_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace biodenoise {

// All offsets exposed by this library count Unicode scalar values, not bytes.
// Strings are stored as UTF-8.

bool IsValidUtf8(std::string_view text);

// Number of code points in a valid UTF-8 string.
size_t CharLength(std::string_view text);

std::u32string ToUtf32(std::string_view text);
std::string ToUtf8(std::u32string_view text);

// Maps code point offsets to byte offsets over a borrowed UTF-8 buffer. The
// indexed string must outlive the index.
class Utf8Index {
 public:
  explicit Utf8Index(std::string_view text);

  // Number of code points.
  size_t size() const { return boundaries_.size() - 1; }

  size_t ByteOffset(size_t char_offset) const {
    return boundaries_[char_offset];
  }

  // Slice [start, end) in code points. Requires start <= end <= size().
  std::string_view Slice(size_t start, size_t end) const;

 private:
  std::string_view text_;
  std::vector<size_t> boundaries_;
};

// Simple (1:1 code point) Unicode case folding. Preserves code point count, so
// offsets computed on folded text are valid on the original.
std::string FoldCase(std::string_view text);
std::u32string FoldCase32(std::string_view text);

bool EqualsIgnoreCase(std::string_view a, std::string_view b);

// First case-insensitive occurrence of `needle` in `haystack`, as a code point
// offset into `haystack`.
std::optional<size_t> FindIgnoreCase(std::string_view haystack,
                                     std::string_view needle);

bool ContainsIgnoreCase(std::string_view haystack, std::string_view needle);

bool IsSpaceChar(char32_t c);

// Removes leading and trailing Unicode whitespace.
std::string_view TrimSpace(std::string_view text);

// 64-bit FNV-1a over the given parts, each terminated by a 0x1f separator so
// that ("ab","c") and ("a","bc") hash differently.
uint64_t StableHash(const std::vector<std::string_view>& parts);

std::string HexU64(uint64_t value, int digits = 16);

}  // namespace biodenoise

#endif  // BIODENOISE_TEXT_UTIL_H_
