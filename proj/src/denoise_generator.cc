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


#include "biodenoise/denoise_generator.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "biodenoise/corruption.h"
#include "biodenoise/sentence_splitter.h"
#include "biodenoise/text_util.h"

namespace biodenoise {
namespace {

enum class Kind { kFactoid, kYes, kNo, kAdversarial };

std::string_view KindName(Kind kind) {
  switch (kind) {
    case Kind::kFactoid:
      return "factoid";
    case Kind::kYes:
      return "yes";
    case Kind::kNo:
      return "no";
    case Kind::kAdversarial:
      return "adversarial";
  }
  return "";
}

size_t CountOccurrences(std::string_view haystack, std::string_view needle) {
  const std::u32string folded_haystack = FoldCase32(haystack);
  const std::u32string folded_needle = FoldCase32(needle);
  if (folded_needle.empty()) return 0;
  size_t count = 0;
  for (size_t pos = folded_haystack.find(folded_needle);
       pos != std::u32string::npos;
       pos = folded_haystack.find(folded_needle, pos + 1)) {
    ++count;
  }
  return count;
}

// The part of the source text an example draws its context from.
struct Window {
  size_t start = 0;
  size_t end = 0;
};

std::variant<Window, SkipReason> ContextWindowFor(const AnnotatedDocument& doc,
                                                  const EntityMention& mention,
                                                  const GenConfig& config) {
  if (config.context_window == ContextWindow::kDocument) {
    return Window{0, CharLength(doc.text)};
  }
  const std::vector<SentenceSpan> sentences = SplitSentences(doc.text);
  const std::optional<size_t> s =
      SentenceContaining(sentences, mention.start, mention.end);
  if (!s) return SkipReason::kCrossSentenceMention;
  return Window{sentences[*s].start, sentences[*s].end};
}

bool Corruptible(const AnnotatedDocument& doc, size_t index,
                 const std::vector<bool>& overlapped,
                 const EntityCatalog& catalog) {
  const EntityMention& m = doc.mentions[index];
  return !overlapped[index] && catalog.HasCandidate(m.entity_type, m.surface);
}

// Mentions that a corrupting generator may pick, or the reason none exists.
std::variant<std::vector<size_t>, SkipReason> CorruptibleMentions(
    const AnnotatedDocument& doc, const EntityCatalog& catalog,
    const GenConfig& config) {
  if (doc.mentions.empty()) return SkipReason::kNoMentions;
  if (config.context_window == ContextWindow::kDocument &&
      CharLength(doc.text) < config.min_context_chars) {
    return SkipReason::kContextTooShort;
  }
  const std::vector<bool> overlapped = OverlapMask(doc);
  if (std::all_of(overlapped.begin(), overlapped.end(),
                  [](bool b) { return b; })) {
    return SkipReason::kOnlyOverlappedMentions;
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < doc.mentions.size(); ++i) {
    if (Corruptible(doc, i, overlapped, catalog)) out.push_back(i);
  }
  if (out.empty()) return SkipReason::kNoCandidate;
  if (config.skip_repeated_surface) {
    std::erase_if(out, [&doc](size_t i) {
      return CountOccurrences(doc.text, doc.mentions[i].surface) > 1;
    });
    if (out.empty()) return SkipReason::kRepeatedSurface;
  }
  return out;
}

nlohmann::json BaseMeta(const AnnotatedDocument& doc, size_t mention_index,
                        Kind kind, const Window& window) {
  const EntityMention& m = doc.mentions[mention_index];
  return {{"doc_id", doc.doc_id},
          {"mention_index", mention_index},
          {"entity_type", m.entity_type},
          {"original", m.surface},
          {"kind", KindName(kind)},
          {"context_start", window.start}};
}

// Shared by the factoid and no generators: sample, splice, cut the window.
struct Corruption {
  CorruptedContext corrupted;
  std::string context;
  size_t window_offset = 0;
  Window window;
};

std::variant<Corruption, SkipReason> CorruptForExample(
    const AnnotatedDocument& doc, size_t mention_index,
    const EntityCatalog& catalog, RngStream& rng, const GenConfig& config) {
  if (mention_index >= doc.mentions.size()) return SkipReason::kNoMentions;
  const std::vector<bool> overlapped = OverlapMask(doc);
  if (overlapped[mention_index]) return SkipReason::kOnlyOverlappedMentions;
  const EntityMention& m = doc.mentions[mention_index];

  auto window_or = ContextWindowFor(doc, m, config);
  if (auto* skip = std::get_if<SkipReason>(&window_or)) return *skip;
  const Window window = std::get<Window>(window_or);
  if (window.end - window.start < config.min_context_chars) {
    return SkipReason::kContextTooShort;
  }
  const Utf8Index source(doc.text);
  if (config.skip_repeated_surface &&
      CountOccurrences(source.Slice(window.start, window.end), m.surface) > 1) {
    return SkipReason::kRepeatedSurface;
  }

  absl::StatusOr<EntitySurface> replacement =
      SampleReplacement(catalog, m.entity_type, m.surface, rng);
  if (!replacement.ok()) return SkipReason::kNoCandidate;

  std::vector<size_t> indices = {mention_index};
  if (config.replace_all_occurrences) {
    for (size_t j = 0; j < doc.mentions.size(); ++j) {
      const EntityMention& other = doc.mentions[j];
      if (j != mention_index && !overlapped[j] &&
          other.entity_type == m.entity_type && other.surface == m.surface &&
          other.start >= window.start && other.end <= window.end) {
        indices.push_back(j);
      }
    }
  }
  absl::StatusOr<CorruptedContext> corrupted =
      CorruptMentions(doc, indices, *replacement);
  if (!corrupted.ok()) return SkipReason::kOnlyOverlappedMentions;

  // Only occurrences inside the window shift, so the window start is stable
  // and its end moves by the total length change.
  const long long delta = static_cast<long long>(CharLength(corrupted->text)) -
                          static_cast<long long>(source.size());
  const Utf8Index target(corrupted->text);
  Corruption out;
  out.window = window;
  out.window_offset = window.start;
  out.context = std::string(target.Slice(
      window.start,
      static_cast<size_t>(static_cast<long long>(window.end) + delta)));
  out.corrupted = *std::move(corrupted);
  return out;
}

GenOutcome AdversarialImpl(
    size_t doc_count,
    const std::function<const AnnotatedDocument&(size_t)>& doc_at,
    size_t source_index, RngStream& rng, const GenConfig& config,
    size_t slot) {
  if (doc_count < 2) return SkipReason::kTooFewDocuments;
  const AnnotatedDocument& source = doc_at(source_index);
  if (source.mentions.empty()) return SkipReason::kNoMentions;
  for (int attempt = 0; attempt < config.adversarial_max_retries; ++attempt) {
    const size_t mention_index = rng.Uniform(source.mentions.size());
    size_t other = rng.Uniform(doc_count - 1);
    if (other >= source_index) ++other;
    const AnnotatedDocument& target = doc_at(other);
    const std::string& surface = source.mentions[mention_index].surface;
    if (ContainsIgnoreCase(target.text, surface)) continue;
    if (CharLength(target.text) < config.min_context_chars) continue;

    QAExample ex;
    ex.id = MakeExampleId(source.doc_id, slot,
                          {source.doc_id, std::to_string(mention_index),
                           target.doc_id, KindName(Kind::kAdversarial)});
    ex.question_type = QuestionType::kYesNo;
    ex.question = surface;
    ex.context = target.text;
    ex.yesno_label = YesNo::kNo;
    ex.provenance = Provenance::kAdversarial;
    ex.meta = BaseMeta(source, mention_index, Kind::kAdversarial,
                       Window{0, CharLength(target.text)});
    ex.meta["context_doc_id"] = target.doc_id;
    return ex;
  }
  return SkipReason::kRetriesExhausted;
}

}  // namespace

std::optional<GenTask> ParseGenTask(std::string_view name) {
  if (name == "span") return GenTask::kSpan;
  if (name == "yesno") return GenTask::kYesNo;
  if (name == "all") return GenTask::kAll;
  return std::nullopt;
}

std::optional<ContextWindow> ParseContextWindow(std::string_view name) {
  if (name == "document") return ContextWindow::kDocument;
  if (name == "sentence") return ContextWindow::kSentence;
  return std::nullopt;
}

absl::StatusOr<YesNoRatio> ParseYesNoRatio(std::string_view text) {
  const std::vector<std::string> parts =
      absl::StrSplit(absl::string_view(text.data(), text.size()), ':');
  YesNoRatio ratio;
  if (parts.size() != 3 || !absl::SimpleAtoi(parts[0], &ratio.yes) ||
      !absl::SimpleAtoi(parts[1], &ratio.no) ||
      !absl::SimpleAtoi(parts[2], &ratio.adversarial)) {
    return absl::InvalidArgumentError(
        absl::StrCat("yes/no ratio must look like 1:1:1, got '",
                     std::string(text), "'"));
  }
  return ratio;
}

absl::Status GenConfig::Validate() const {
  if (max_examples_per_doc < 1) {
    return absl::InvalidArgumentError("max_examples_per_doc must be >= 1");
  }
  if (yes_no_ratio.yes == 0 || yes_no_ratio.no == 0 ||
      yes_no_ratio.adversarial == 0) {
    return absl::InvalidArgumentError("yes/no ratio weights must be positive");
  }
  if (adversarial_max_retries < 1) {
    return absl::InvalidArgumentError("adversarial_max_retries must be >= 1");
  }
  if (workers < 1) return absl::InvalidArgumentError("workers must be >= 1");
  return absl::OkStatus();
}

nlohmann::json GenConfig::ToJson() const {
  return {
      {"max_examples_per_doc", max_examples_per_doc},
      {"replace_all_occurrences", replace_all_occurrences},
      {"skip_repeated_surface", skip_repeated_surface},
      {"min_context_chars", min_context_chars},
      {"yes_no_ratio", absl::StrCat(yes_no_ratio.yes, ":", yes_no_ratio.no,
                                    ":", yes_no_ratio.adversarial)},
      {"seed", seed},
      {"task", task == GenTask::kSpan    ? "span"
               : task == GenTask::kYesNo ? "yesno"
                                         : "all"},
      {"span_question_type", QuestionTypeName(span_question_type)},
      {"context_window",
       context_window == ContextWindow::kDocument ? "document" : "sentence"},
      {"adversarial_max_retries", adversarial_max_retries},
  };
}

std::string_view SkipReasonName(SkipReason reason) {
  switch (reason) {
    case SkipReason::kNoMentions:
      return "NoMentions";
    case SkipReason::kOnlyOverlappedMentions:
      return "OnlyOverlappedMentions";
    case SkipReason::kNoCandidate:
      return "NoCandidate";
    case SkipReason::kContextTooShort:
      return "ContextTooShort";
    case SkipReason::kRepeatedSurface:
      return "RepeatedSurface";
    case SkipReason::kCrossSentenceMention:
      return "CrossSentenceMention";
    case SkipReason::kTooFewDocuments:
      return "TooFewDocuments";
    case SkipReason::kRetriesExhausted:
      return "RetriesExhausted";
  }
  return "Unknown";
}

GenOutcome GenerateFactoidExampleAt(const AnnotatedDocument& doc,
                                    size_t mention_index,
                                    const EntityCatalog& catalog,
                                    RngStream& rng, const GenConfig& config,
                                    size_t slot) {
  auto corruption_or =
      CorruptForExample(doc, mention_index, catalog, rng, config);
  if (auto* skip = std::get_if<SkipReason>(&corruption_or)) return *skip;
  Corruption& c = std::get<Corruption>(corruption_or);

  QAExample ex;
  ex.id = MakeExampleId(doc.doc_id, slot,
                        {doc.doc_id, std::to_string(mention_index),
                         c.corrupted.replacement_surface,
                         KindName(Kind::kFactoid)});
  ex.question_type = config.span_question_type;
  ex.question = c.corrupted.original_surface;
  ex.context = std::move(c.context);
  ex.answers.push_back({c.corrupted.replacement_surface,
                        c.corrupted.corrupted_span.start - c.window_offset});
  for (const CharSpan& span : c.corrupted.replaced_spans) {
    if (span == c.corrupted.corrupted_span) continue;
    ex.answers.push_back(
        {c.corrupted.replacement_surface, span.start - c.window_offset});
  }
  ex.provenance = Provenance::kDenoise;
  ex.meta = BaseMeta(doc, mention_index, Kind::kFactoid, c.window);
  ex.meta["replacement"] = c.corrupted.replacement_surface;
  return ex;
}

GenOutcome GenerateFactoidExample(const AnnotatedDocument& doc,
                                  const EntityCatalog& catalog, RngStream& rng,
                                  const GenConfig& config) {
  auto eligible = CorruptibleMentions(doc, catalog, config);
  if (auto* skip = std::get_if<SkipReason>(&eligible)) return *skip;
  const std::vector<size_t>& indices = std::get<std::vector<size_t>>(eligible);
  return GenerateFactoidExampleAt(doc, indices[rng.Uniform(indices.size())],
                                  catalog, rng, config);
}

GenOutcome GenerateYesExampleAt(const AnnotatedDocument& doc,
                                size_t mention_index, const GenConfig& config,
                                size_t slot) {
  if (mention_index >= doc.mentions.size()) return SkipReason::kNoMentions;
  const EntityMention& m = doc.mentions[mention_index];
  auto window_or = ContextWindowFor(doc, m, config);
  if (auto* skip = std::get_if<SkipReason>(&window_or)) return *skip;
  const Window window = std::get<Window>(window_or);
  if (window.end - window.start < config.min_context_chars) {
    return SkipReason::kContextTooShort;
  }
  const Utf8Index source(doc.text);

  QAExample ex;
  ex.id = MakeExampleId(doc.doc_id, slot,
                        {doc.doc_id, std::to_string(mention_index),
                         KindName(Kind::kYes)});
  ex.question_type = QuestionType::kYesNo;
  ex.question = m.surface;
  ex.context = std::string(source.Slice(window.start, window.end));
  ex.yesno_label = YesNo::kYes;
  ex.provenance = Provenance::kDenoise;
  ex.meta = BaseMeta(doc, mention_index, Kind::kYes, window);
  return ex;
}

GenOutcome GenerateYesExample(const AnnotatedDocument& doc, RngStream& rng,
                              const GenConfig& config) {
  if (doc.mentions.empty()) return SkipReason::kNoMentions;
  return GenerateYesExampleAt(doc, rng.Uniform(doc.mentions.size()), config);
}

GenOutcome GenerateNoExampleAt(const AnnotatedDocument& doc,
                               size_t mention_index,
                               const EntityCatalog& catalog, RngStream& rng,
                               const GenConfig& config, size_t slot) {
  auto corruption_or =
      CorruptForExample(doc, mention_index, catalog, rng, config);
  if (auto* skip = std::get_if<SkipReason>(&corruption_or)) return *skip;
  Corruption& c = std::get<Corruption>(corruption_or);

  QAExample ex;
  ex.id = MakeExampleId(doc.doc_id, slot,
                        {doc.doc_id, std::to_string(mention_index),
                         c.corrupted.replacement_surface, KindName(Kind::kNo)});
  ex.question_type = QuestionType::kYesNo;
  ex.question = c.corrupted.replacement_surface;
  ex.context = std::move(c.context);
  ex.yesno_label = YesNo::kNo;
  ex.provenance = Provenance::kDenoise;
  ex.meta = BaseMeta(doc, mention_index, Kind::kNo, c.window);
  ex.meta["replacement"] = c.corrupted.replacement_surface;
  ex.meta["corrupted_start"] = c.corrupted.corrupted_span.start - c.window_offset;
  return ex;
}

GenOutcome GenerateNoExample(const AnnotatedDocument& doc,
                             const EntityCatalog& catalog, RngStream& rng,
                             const GenConfig& config) {
  auto eligible = CorruptibleMentions(doc, catalog, config);
  if (auto* skip = std::get_if<SkipReason>(&eligible)) return *skip;
  const std::vector<size_t>& indices = std::get<std::vector<size_t>>(eligible);
  return GenerateNoExampleAt(doc, indices[rng.Uniform(indices.size())], catalog,
                             rng, config);
}

GenOutcome GenerateAdversarialNegative(std::span<const AnnotatedDocument> docs,
                                       size_t source_index, RngStream& rng,
                                       const GenConfig& config, size_t slot) {
  if (source_index >= docs.size()) return SkipReason::kTooFewDocuments;
  return AdversarialImpl(
      docs.size(),
      [docs](size_t i) -> const AnnotatedDocument& { return docs[i]; },
      source_index, rng, config, slot);
}

nlohmann::json GenerationSummary::ToJson() const {
  return {{"generated", generated},
          {"generated_by_kind", generated_by_kind},
          {"skipped", skipped}};
}

namespace {

struct DocOutput {
  std::vector<QAExample> examples;
  std::vector<std::string> generated_kinds;
  std::vector<SkipReason> skips;
};

void Record(GenOutcome outcome, std::string_view kind, DocOutput* out) {
  if (auto* skip = std::get_if<SkipReason>(&outcome)) {
    out->skips.push_back(*skip);
    return;
  }
  out->examples.push_back(std::get<QAExample>(std::move(outcome)));
  out->generated_kinds.emplace_back(kind);
}

class CorpusGenerator {
 public:
  CorpusGenerator(std::vector<const AnnotatedDocument*> docs,
                  const EntityCatalog& catalog, const GenConfig& config)
      : docs_(std::move(docs)), catalog_(catalog), config_(config) {}

  DocOutput Run(size_t d) const {
    DocOutput out;
    const size_t slots = static_cast<size_t>(config_.max_examples_per_doc);
    if (config_.task != GenTask::kYesNo) SpanSlots(d, slots, &out);
    if (config_.task != GenTask::kSpan) {
      YesNoSlots(d, slots, config_.task == GenTask::kAll ? slots : 0, &out);
    }
    return out;
  }

 private:
  const AnnotatedDocument& Doc(size_t d) const { return *docs_[d]; }

  void SpanSlots(size_t d, size_t slots, DocOutput* out) const {
    const AnnotatedDocument& doc = Doc(d);
    RngStream rng(config_.seed, absl::StrCat(doc.doc_id, "/span"));
    auto eligible_or = CorruptibleMentions(doc, catalog_, config_);
    if (auto* skip = std::get_if<SkipReason>(&eligible_or)) {
      out->skips.insert(out->skips.end(), slots, *skip);
      return;
    }
    std::vector<size_t> order = std::get<std::vector<size_t>>(eligible_or);
    rng.Shuffle(order);
    size_t next = 0;
    for (size_t s = 0; s < slots; ++s) {
      SkipReason last = SkipReason::kNoCandidate;
      bool filled = false;
      while (next < order.size() && !filled) {
        GenOutcome outcome = GenerateFactoidExampleAt(doc, order[next++],
                                                      catalog_, rng, config_, s);
        if (auto* skip = std::get_if<SkipReason>(&outcome)) {
          last = *skip;
          continue;
        }
        Record(std::move(outcome), KindName(Kind::kFactoid), out);
        filled = true;
      }
      if (!filled) out->skips.push_back(last);
    }
  }

  Kind SlotKind(size_t global_slot) const {
    const YesNoRatio& r = config_.yes_no_ratio;
    const size_t pos = global_slot % (r.yes + r.no + r.adversarial);
    if (pos < r.yes) return Kind::kYes;
    if (pos < r.yes + r.no) return Kind::kNo;
    return Kind::kAdversarial;
  }

  void YesNoSlots(size_t d, size_t slots, size_t slot_offset,
                  DocOutput* out) const {
    const AnnotatedDocument& doc = Doc(d);
    RngStream rng(config_.seed, absl::StrCat(doc.doc_id, "/yesno"));
    std::vector<size_t> order(doc.mentions.size());
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    std::vector<bool> used(doc.mentions.size(), false);
    const std::vector<bool> overlapped = OverlapMask(doc);

    for (size_t s = 0; s < slots; ++s) {
      const Kind kind = SlotKind(d * slots + s);
      const size_t slot = slot_offset + s;
      if (kind == Kind::kAdversarial) {
        Record(AdversarialImpl(
                   docs_.size(),
                   [this](size_t i) -> const AnnotatedDocument& {
                     return Doc(i);
                   },
                   d, rng, config_, slot),
               KindName(kind), out);
        continue;
      }
      if (doc.mentions.empty()) {
        out->skips.push_back(SkipReason::kNoMentions);
        continue;
      }
      SkipReason last = kind == Kind::kNo ? SkipReason::kNoCandidate
                                          : SkipReason::kNoMentions;
      bool filled = false;
      for (size_t k = 0; k < order.size() && !filled; ++k) {
        const size_t i = order[k];
        if (used[i]) continue;
        if (kind == Kind::kNo && !Corruptible(doc, i, overlapped, catalog_)) {
          continue;
        }
        GenOutcome outcome =
            kind == Kind::kYes
                ? GenerateYesExampleAt(doc, i, config_, slot)
                : GenerateNoExampleAt(doc, i, catalog_, rng, config_, slot);
        used[i] = true;
        if (auto* skip = std::get_if<SkipReason>(&outcome)) {
          last = *skip;
          continue;
        }
        Record(std::move(outcome), KindName(kind), out);
        filled = true;
      }
      if (!filled) out->skips.push_back(last);
    }
  }

  std::vector<const AnnotatedDocument*> docs_;
  const EntityCatalog& catalog_;
  const GenConfig& config_;
};

}  // namespace

absl::StatusOr<GenerationResult> GenerateCorpus(
    std::span<const AnnotatedDocument> docs, const EntityCatalog& catalog,
    const GenConfig& config) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  std::vector<const AnnotatedDocument*> sorted;
  sorted.reserve(docs.size());
  for (const AnnotatedDocument& doc : docs) sorted.push_back(&doc);
  std::sort(sorted.begin(), sorted.end(),
            [](const AnnotatedDocument* a, const AnnotatedDocument* b) {
              return a->doc_id < b->doc_id;
            });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->doc_id == sorted[i - 1]->doc_id) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate doc_id '", sorted[i]->doc_id, "'"));
    }
  }

  const CorpusGenerator generator(std::move(sorted), catalog, config);
  std::vector<DocOutput> outputs(docs.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t d = next++; d < outputs.size(); d = next++) {
      outputs[d] = generator.Run(d);
    }
  };
  const size_t threads =
      std::min<size_t>(static_cast<size_t>(config.workers), outputs.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  GenerationResult result;
  for (DocOutput& out : outputs) {
    for (const std::string& kind : out.generated_kinds) {
      ++result.summary.generated_by_kind[kind];
    }
    for (SkipReason skip : out.skips) {
      ++result.summary.skipped[std::string(SkipReasonName(skip))];
    }
    for (QAExample& ex : out.examples) {
      result.examples.push_back(std::move(ex));
    }
  }
  result.summary.generated = result.examples.size();
  return result;
}

}  // namespace biodenoise
