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


#ifndef BIODENOISE_CLOZE_GENERATOR_H_
#define BIODENOISE_CLOZE_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/corpus.h"
#include "biodenoise/denoise_generator.h"
#include "biodenoise/qa_example.h"
#include "json.hpp"

namespace biodenoise {

inline constexpr std::string_view kMaskToken = "[MASK]";

struct ClozeQuestion {
  // The containing sentence with the mention replaced by kMaskToken.
  std::string masked_sentence;
  std::string wh_word;
  // The masked mention, offset into `context`.
  Answer answer;
  std::string context;
};

// Errors: OutOfRange ("IndexOutOfRange"); FailedPrecondition
// ("CrossSentenceMention") when no sentence holds the whole mention, or
// ("MaskCollision") when the sentence already contains the mask token.
absl::StatusOr<ClozeQuestion> MakeCloze(const AnnotatedDocument& doc,
                                        size_t mention_index,
                                        const std::vector<SentenceSpan>& sentences);

// Picks a question word from the mention. Rules, first match wins:
//
//   all digits, a decade ("1990s") or a month with a number  -> When
//   a number with a unit or percent sign ("5 mg", "12%")      -> How
//   type Person or Species                                   -> Who
//   type Location or Anatomy                                 -> Where
//   anything else                                            -> What
std::string_view WhHeuristic(const EntityMention& mention);

struct ClozeConfig {
  // Keep "[MASK]" in the question instead of eliding it.
  bool keep_mask = false;
  int max_examples_per_doc = 1;
  size_t min_context_chars = 0;
  uint64_t seed = 0;
  int workers = 1;

  absl::Status Validate() const;
  nlohmann::json ToJson() const;
};

// Question: wh word, a space, then the masked sentence. With keep_mask off the
// mask is dropped along with trailing sentence punctuation, so
// "Nivolumab was approved in [MASK]." becomes
// "When Nivolumab was approved in".
absl::StatusOr<QAExample> GenerateClozeExample(
    const AnnotatedDocument& doc, size_t mention_index,
    const std::vector<SentenceSpan>& sentences, const ClozeConfig& config = {},
    size_t slot = 0);

// Up to max_examples_per_doc cloze examples per document, mentions drawn
// without replacement from RngStream(seed, doc_id + "/cloze").
absl::StatusOr<GenerationResult> GenerateClozeCorpus(
    std::span<const AnnotatedDocument> docs, const ClozeConfig& config);

}  // namespace biodenoise

#endif  // BIODENOISE_CLOZE_GENERATOR_H_
