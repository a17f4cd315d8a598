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


#include "biodenoise/cloze_generator.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "biodenoise/rng.h"
#include "biodenoise/sentence_splitter.h"
#include "biodenoise/text_util.h"

namespace biodenoise {
namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

constexpr std::array<std::string_view, 22> kUnits = {
    "mg",  "g",   "kg",   "µg",  "μg",  "ug",   "ng",  "ml", "l",   "mm",  "µm",
    "μm",  "nm",  "mmol", "mol", "iu",  "u",    "mg/kg", "h", "hr", "min", "bp"};

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return absl::ascii_isdigit(static_cast<unsigned char>(c));
  });
}

bool HasDigit(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return absl::ascii_isdigit(static_cast<unsigned char>(c));
  });
}

bool IsDateLike(std::string_view surface) {
  if (AllDigits(surface)) return true;
  if (surface.size() == 5 && surface.back() == 's' &&
      AllDigits(surface.substr(0, 4))) {
    return true;
  }
  if (!HasDigit(surface)) return false;
  const std::string lower = absl::AsciiStrToLower(std::string(surface));
  return std::any_of(kMonths.begin(), kMonths.end(), [&lower](auto month) {
    return absl::StrContains(lower, std::string(month));
  });
}

bool IsQuantityLike(std::string_view surface) {
  if (!HasDigit(surface)) return false;
  if (surface.find('%') != std::string_view::npos) return true;
  // The unit is whatever follows the last digit, e.g. "2.5 mg/kg" -> "mg/kg".
  const size_t last_digit = surface.find_last_of("0123456789");
  std::string unit = absl::AsciiStrToLower(
      std::string(TrimSpace(surface.substr(last_digit + 1))));
  if (unit.empty()) return false;
  return std::find(kUnits.begin(), kUnits.end(), unit) != kUnits.end();
}

bool TypeIn(std::string_view type, std::initializer_list<std::string_view> set) {
  return std::any_of(set.begin(), set.end(), [type](std::string_view t) {
    return absl::EqualsIgnoreCase(std::string(type), std::string(t));
  });
}

// Drops the mask, collapses whitespace and trims trailing sentence
// punctuation.
std::string ElideMask(std::string_view masked_sentence) {
  const size_t pos = masked_sentence.find(kMaskToken);
  const std::string joined =
      absl::StrCat(std::string(masked_sentence.substr(0, pos)), " ",
                   std::string(masked_sentence.substr(pos + kMaskToken.size())));
  std::string collapsed;
  bool space = false;
  for (char c : joined) {
    if (absl::ascii_isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !collapsed.empty()) collapsed += ' ';
    space = false;
    collapsed += c;
  }
  while (!collapsed.empty() &&
         (collapsed.back() == '.' || collapsed.back() == '!' ||
          collapsed.back() == '?' || collapsed.back() == ' ')) {
    collapsed.pop_back();
  }
  return collapsed;
}

}  // namespace

absl::StatusOr<ClozeQuestion> MakeCloze(
    const AnnotatedDocument& doc, size_t mention_index,
    const std::vector<SentenceSpan>& sentences) {
  if (mention_index >= doc.mentions.size()) {
    return absl::OutOfRangeError(
        absl::StrCat("IndexOutOfRange: mention ", mention_index, " of ",
                     doc.mentions.size(), " in ", doc.doc_id));
  }
  const EntityMention& m = doc.mentions[mention_index];
  const std::optional<size_t> s = SentenceContaining(sentences, m.start, m.end);
  if (!s) {
    return absl::FailedPreconditionError(absl::StrCat(
        "CrossSentenceMention: mention ", mention_index, " in ", doc.doc_id));
  }
  const SentenceSpan& sentence = sentences[*s];
  const Utf8Index index(doc.text);
  const std::string_view sentence_text = index.Slice(sentence.start, sentence.end);
  if (sentence_text.find(kMaskToken) != std::string_view::npos) {
    return absl::FailedPreconditionError(absl::StrCat(
        "MaskCollision: sentence already contains ", std::string(kMaskToken), " in ",
        doc.doc_id));
  }
  ClozeQuestion out;
  out.masked_sentence =
      absl::StrCat(std::string(index.Slice(sentence.start, m.start)),
                   std::string(kMaskToken),
                   std::string(index.Slice(m.end, sentence.end)));
  out.wh_word = std::string(WhHeuristic(m));
  out.answer = {m.surface, m.start};
  out.context = doc.text;
  return out;
}

std::string_view WhHeuristic(const EntityMention& mention) {
  const std::string_view surface = TrimSpace(mention.surface);
  if (IsDateLike(surface)) return "When";
  if (IsQuantityLike(surface)) return "How";
  if (TypeIn(mention.entity_type, {"Person", "Species"})) return "Who";
  if (TypeIn(mention.entity_type, {"Location", "Anatomy"})) return "Where";
  return "What";
}

absl::Status ClozeConfig::Validate() const {
  if (max_examples_per_doc < 1) {
    return absl::InvalidArgumentError("max_examples_per_doc must be >= 1");
  }
  if (workers < 1) return absl::InvalidArgumentError("workers must be >= 1");
  return absl::OkStatus();
}

nlohmann::json ClozeConfig::ToJson() const {
  return {{"keep_mask", keep_mask},
          {"max_examples_per_doc", max_examples_per_doc},
          {"min_context_chars", min_context_chars},
          {"seed", seed}};
}

absl::StatusOr<QAExample> GenerateClozeExample(
    const AnnotatedDocument& doc, size_t mention_index,
    const std::vector<SentenceSpan>& sentences, const ClozeConfig& config,
    size_t slot) {
  absl::StatusOr<ClozeQuestion> cloze = MakeCloze(doc, mention_index, sentences);
  if (!cloze.ok()) return cloze.status();
  QAExample ex;
  ex.id = MakeExampleId(doc.doc_id, slot,
                        {doc.doc_id, std::to_string(mention_index), "cloze"});
  ex.question_type = QuestionType::kFactoid;
  ex.question = absl::StrCat(
      cloze->wh_word, " ",
      config.keep_mask ? cloze->masked_sentence
                       : ElideMask(cloze->masked_sentence));
  ex.context = std::move(cloze->context);
  ex.answers.push_back(cloze->answer);
  ex.provenance = Provenance::kCloze;
  ex.meta = {{"doc_id", doc.doc_id},
             {"mention_index", mention_index},
             {"entity_type", doc.mentions[mention_index].entity_type},
             {"wh_word", cloze->wh_word},
             {"masked_sentence", cloze->masked_sentence}};
  return ex;
}

absl::StatusOr<GenerationResult> GenerateClozeCorpus(
    std::span<const AnnotatedDocument> docs, const ClozeConfig& config) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  std::vector<const AnnotatedDocument*> sorted;
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

  struct DocOutput {
    std::vector<QAExample> examples;
    std::vector<SkipReason> skips;
  };
  const size_t slots = static_cast<size_t>(config.max_examples_per_doc);
  auto run = [&config, slots](const AnnotatedDocument& doc) {
    DocOutput out;
    if (doc.mentions.empty()) {
      out.skips.assign(slots, SkipReason::kNoMentions);
      return out;
    }
    if (CharLength(doc.text) < config.min_context_chars) {
      out.skips.assign(slots, SkipReason::kContextTooShort);
      return out;
    }
    const std::vector<SentenceSpan> sentences = SplitSentences(doc.text);
    RngStream rng(config.seed, absl::StrCat(doc.doc_id, "/cloze"));
    std::vector<size_t> order(doc.mentions.size());
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    size_t next = 0;
    for (size_t s = 0; s < slots; ++s) {
      bool filled = false;
      while (next < order.size() && !filled) {
        absl::StatusOr<QAExample> ex =
            GenerateClozeExample(doc, order[next++], sentences, config, s);
        if (!ex.ok()) continue;
        out.examples.push_back(*std::move(ex));
        filled = true;
      }
      if (!filled) out.skips.push_back(SkipReason::kCrossSentenceMention);
    }
    return out;
  };

  std::vector<DocOutput> outputs(sorted.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t d = next++; d < outputs.size(); d = next++) {
      outputs[d] = run(*sorted[d]);
    }
  };
  const size_t threads =
      std::min<size_t>(static_cast<size_t>(config.workers), outputs.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  GenerationResult result;
  for (DocOutput& out : outputs) {
    for (SkipReason skip : out.skips) {
      ++result.summary.skipped[std::string(SkipReasonName(skip))];
    }
    for (QAExample& ex : out.examples) result.examples.push_back(std::move(ex));
  }
  result.summary.generated = result.examples.size();
  if (result.summary.generated > 0) {
    result.summary.generated_by_kind["cloze"] = result.summary.generated;
  }
  return result;
}

}  // namespace biodenoise
