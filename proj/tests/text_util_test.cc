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

#include "gtest/gtest.h"

namespace biodenoise {
namespace {

TEST(TextUtilTest, Utf8Validity) {
  EXPECT_TRUE(IsValidUtf8("plain"));
  EXPECT_TRUE(IsValidUtf8("IL-1β"));
  EXPECT_FALSE(IsValidUtf8("\xff\xfe"));
  EXPECT_FALSE(IsValidUtf8("\xc3"));
}

TEST(TextUtilTest, CharLengthCountsCodePoints) {
  EXPECT_EQ(CharLength(""), 0u);
  EXPECT_EQ(CharLength("abc"), 3u);
  EXPECT_EQ(CharLength("Sjögren"), 7u);
  EXPECT_EQ(CharLength("𝛼"), 1u);
}

TEST(TextUtilTest, Utf32RoundTrip) {
  const std::string text = "TNF-α and Crohn’s disease";
  EXPECT_EQ(ToUtf8(ToUtf32(text)), text);
}

TEST(TextUtilTest, IndexSlicesByCodePoint) {
  const Utf8Index index("aβc");
  EXPECT_EQ(index.size(), 3u);
  EXPECT_EQ(index.ByteOffset(2), 3u);
  EXPECT_EQ(index.Slice(1, 3), "βc");
  EXPECT_EQ(index.Slice(0, 0), "");
}

TEST(TextUtilTest, CaseInsensitiveSearch) {
  EXPECT_TRUE(EqualsIgnoreCase("Nivolumab", "nivolumab"));
  EXPECT_FALSE(EqualsIgnoreCase("Nivolumab", "Bortezomib"));
  EXPECT_EQ(FindIgnoreCase("Treated with NIVOLUMAB daily", "nivolumab"), 13u);
  EXPECT_EQ(FindIgnoreCase("ΑΒΓ β", "β"), 1u);
  EXPECT_FALSE(FindIgnoreCase("abc", "d").has_value());
  EXPECT_TRUE(ContainsIgnoreCase("The P53 protein", "p53"));
}

TEST(TextUtilTest, FoldingPreservesLength) {
  for (std::string_view s : {"ΣΊΣΥΦΟΣ", "Straße", "İstanbul", "IL-1β"}) {
    EXPECT_EQ(FoldCase32(s).size(), CharLength(s)) << s;
  }
}

TEST(TextUtilTest, TrimSpace) {
  EXPECT_EQ(TrimSpace("  a b \n"), "a b");
  EXPECT_EQ(TrimSpace(" x "), "x");
  EXPECT_EQ(TrimSpace("   "), "");
}

TEST(TextUtilTest, StableHashIsFnv1a) {
  // FNV-1a 64 of the empty input is the offset basis.
  EXPECT_EQ(StableHash({}), 0xcbf29ce484222325ULL);
  // Part boundaries matter.
  EXPECT_NE(StableHash({"ab", "c"}), StableHash({"a", "bc"}));
  EXPECT_EQ(HexU64(0xabcULL, 6), "000abc");
}

}  // namespace
}  // namespace biodenoise
