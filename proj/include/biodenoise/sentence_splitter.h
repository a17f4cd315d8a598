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


#ifndef BIODENOISE_SENTENCE_SPLITTER_H_
#define BIODENOISE_SENTENCE_SPLITTER_H_

#include <optional>
#include <string_view>
#include <vector>

#include "biodenoise/corpus.h"

namespace biodenoise {

// Rule-based sentence segmentation. A sentence ends at '.', '!' or '?'
// (plus any closing quotes or brackets) when followed by whitespace and then
// an uppercase letter or a digit. A '.' ending a known abbreviation
// ("e.g.", "et al.", "Fig.", ...) never ends a sentence.
//
// Spans carry no leading or trailing whitespace; every non-whitespace code
// point lies in exactly one span. Text without a boundary yields one span.
std::vector<SentenceSpan> SplitSentences(std::string_view text);

// Index of the sentence that fully contains [start, end), if any.
std::optional<size_t> SentenceContaining(const std::vector<SentenceSpan>& spans,
                                         size_t start, size_t end);

}  // namespace biodenoise

#endif  // BIODENOISE_SENTENCE_SPLITTER_H_
