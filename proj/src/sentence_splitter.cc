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


#include "biodenoise/sentence_splitter.h"

#include <unicode/uchar.h>

#include <algorithm>
#include <array>
#include <string>

#include "biodenoise/text_util.h"

namespace biodenoise {
namespace {

// Lowercased, without the final period.
constexpr std::array<std::u32string_view, 33> kAbbreviations = {
    U"al",     U"approx", U"ca",   U"cf",   U"co",    U"dr",   U"e.g",
    U"eg",     U"eq",     U"eqs",  U"esp",  U"etc",   U"fig",
    U"figs",   U"i.e",    U"ie",   U"inc",  U"jr",    U"ltd",  U"mr",
    U"mrs",    U"ms",     U"no",   U"nos",  U"pp",    U"prof", U"ref",
    U"refs",   U"resp",   U"sp",   U"spp",  U"vol",   U"vs"};

bool IsTerminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

bool IsCloser(char32_t c) {
  return c == U')' || c == U']' || c == U'"' || c == U'\'' || c == U'”' ||
         c == U'’';
}

bool StartsSentence(char32_t c) {
  return u_isupper(static_cast<UChar32>(c)) ||
         u_isdigit(static_cast<UChar32>(c));
}

// True when the period at `dot` terminates an abbreviation.
bool IsAbbreviation(const std::u32string& chars, size_t dot) {
  size_t begin = dot;
  while (begin > 0 && !IsSpaceChar(chars[begin - 1])) --begin;
  std::u32string word = chars.substr(begin, dot - begin);
  for (char32_t& c : word) {
    c = static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
  }
  // Strip a leading bracket, as in "(e.g. ...".
  while (!word.empty() && (word.front() == U'(' || word.front() == U'[')) {
    word.erase(word.begin());
  }
  return std::find(kAbbreviations.begin(), kAbbreviations.end(),
                   std::u32string_view(word)) != kAbbreviations.end();
}

}  // namespace

std::vector<SentenceSpan> SplitSentences(std::string_view text) {
  const std::u32string chars = ToUtf32(text);
  const size_t n = chars.size();
  std::vector<SentenceSpan> spans;
  size_t i = 0;
  while (i < n) {
    while (i < n && IsSpaceChar(chars[i])) ++i;
    if (i == n) break;
    const size_t start = i;
    size_t end = n;
    for (size_t p = start; p < n; ++p) {
      if (!IsTerminal(chars[p])) continue;
      size_t q = p + 1;
      while (q < n && (IsTerminal(chars[q]) || IsCloser(chars[q]))) ++q;
      if (q >= n || !IsSpaceChar(chars[q])) continue;
      size_t r = q;
      while (r < n && IsSpaceChar(chars[r])) ++r;
      if (r >= n || !StartsSentence(chars[r])) continue;
      if (chars[p] == U'.' && q == p + 1 && IsAbbreviation(chars, p)) continue;
      end = q;
      break;
    }
    size_t trimmed = end;
    while (trimmed > start && IsSpaceChar(chars[trimmed - 1])) --trimmed;
    spans.push_back({start, trimmed});
    i = end;
  }
  return spans;
}

std::optional<size_t> SentenceContaining(const std::vector<SentenceSpan>& spans,
                                         size_t start, size_t end) {
  auto it = std::upper_bound(
      spans.begin(), spans.end(), start,
      [](size_t value, const SentenceSpan& s) { return value < s.start; });
  if (it == spans.begin()) return std::nullopt;
  --it;
  if (start >= it->start && end <= it->end) {
    return static_cast<size_t>(it - spans.begin());
  }
  return std::nullopt;
}

}  // namespace biodenoise
