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


#ifndef BIODENOISE_DENOISE_GENERATOR_H_
#define BIODENOISE_DENOISE_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "biodenoise/corpus.h"
#include "biodenoise/entity_catalog.h"
#include "biodenoise/qa_example.h"
#include "biodenoise/rng.h"
#include "json.hpp"

namespace biodenoise {

// Which examples GenerateCorpus emits for every document.
enum class GenTask { kSpan, kYesNo, kAll };

// kSentence narrows the context to the sentence holding the chosen mention.
enum class ContextWindow { kDocument, kSentence };

std::optional<GenTask> ParseGenTask(std::string_view name);
std::optional<ContextWindow> ParseContextWindow(std::string_view name);

// Relative weights of yes, no and adversarial-no examples.
struct YesNoRatio {
  uint32_t yes = 1;
  uint32_t no = 1;
  uint32_t adversarial = 1;
};

// Parses "1:1:1".
absl::StatusOr<YesNoRatio> ParseYesNoRatio(std::string_view text);

struct GenConfig {
  int max_examples_per_doc = 1;
  bool replace_all_occurrences = false;
  // Skip mentions whose surface occurs more than once in the context.
  bool skip_repeated_surface = false;
  size_t min_context_chars = 100;
  YesNoRatio yes_no_ratio;
  uint64_t seed = 0;
  GenTask task = GenTask::kSpan;
  // Label for span examples; both are built the same way.
  QuestionType span_question_type = QuestionType::kFactoid;
  ContextWindow context_window = ContextWindow::kDocument;
  int adversarial_max_retries = 32;
  // Thread count. Never affects output.
  int workers = 1;

  absl::Status Validate() const;
  // Every field except `workers`.
  nlohmann::json ToJson() const;
};

enum class SkipReason {
  kNoMentions,
  kOnlyOverlappedMentions,
  kNoCandidate,
  kContextTooShort,
  kRepeatedSurface,
  kCrossSentenceMention,
  kTooFewDocuments,
  kRetriesExhausted,
};

std::string_view SkipReasonName(SkipReason reason);

using GenOutcome = std::variant<QAExample, SkipReason>;

// Corrupts one randomly chosen eligible mention. The question is the original
// surface; the single answer is the replacement at its spliced offset.
GenOutcome GenerateFactoidExample(const AnnotatedDocument& doc,
                                  const EntityCatalog& catalog, RngStream& rng,
                                  const GenConfig& config);

// Same, for a fixed mention. `slot` numbers the example within its document.
GenOutcome GenerateFactoidExampleAt(const AnnotatedDocument& doc,
                                    size_t mention_index,
                                    const EntityCatalog& catalog,
                                    RngStream& rng, const GenConfig& config,
                                    size_t slot = 0);

// Question is a mention surface, context the untouched text, label yes.
GenOutcome GenerateYesExample(const AnnotatedDocument& doc, RngStream& rng,
                              const GenConfig& config);
GenOutcome GenerateYesExampleAt(const AnnotatedDocument& doc,
                                size_t mention_index, const GenConfig& config,
                                size_t slot = 0);

// Context is corrupted; the question is the replacement surface; label no.
GenOutcome GenerateNoExample(const AnnotatedDocument& doc,
                             const EntityCatalog& catalog, RngStream& rng,
                             const GenConfig& config);
GenOutcome GenerateNoExampleAt(const AnnotatedDocument& doc,
                               size_t mention_index,
                               const EntityCatalog& catalog, RngStream& rng,
                               const GenConfig& config, size_t slot = 0);

// Pairs a mention surface of docs[source_index] with the text of another
// document that does not contain it (case-insensitive), label no. Resamples
// the context document up to config.adversarial_max_retries times.
GenOutcome GenerateAdversarialNegative(std::span<const AnnotatedDocument> docs,
                                       size_t source_index, RngStream& rng,
                                       const GenConfig& config,
                                       size_t slot = 0);

struct GenerationSummary {
  size_t generated = 0;
  std::map<std::string, size_t> generated_by_kind;
  std::map<std::string, size_t> skipped;

  // {"generated": n, "generated_by_kind": {...}, "skipped": {reason: n}}
  nlohmann::json ToJson() const;
};

struct GenerationResult {
  std::vector<QAExample> examples;
  GenerationSummary summary;
};

// Runs the configured task over every document. Documents are processed in
// doc_id order, each with its own RngStream(seed, doc_id + family), so the
// result depends only on the document set, catalog and config, never on input
// order or worker count.
//
// Every document gets max_examples_per_doc span slots and/or yes/no slots.
// Yes/no slot kinds follow the ratio as a repeating pattern over the global
// slot number, so error-free corpora hit the ratio exactly.
absl::StatusOr<GenerationResult> GenerateCorpus(
    std::span<const AnnotatedDocument> docs, const EntityCatalog& catalog,
    const GenConfig& config);

}  // namespace biodenoise

#endif  // BIODENOISE_DENOISE_GENERATOR_H_
