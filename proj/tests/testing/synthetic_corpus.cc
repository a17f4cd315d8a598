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


#include "testing/synthetic_corpus.h"

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "biodenoise/rng.h"
#include "biodenoise/text_util.h"

namespace biodenoise::testing {
namespace {

struct Term {
  std::string_view surface;
  std::string_view norm_id;
};

struct TypeVocab {
  std::string_view type;
  std::vector<Term> terms;
};

const std::vector<TypeVocab>& Vocabulary() {
  static const auto* vocab = new std::vector<TypeVocab>{
      {"Chemical",
       {{"Nivolumab", "D000077594"}, {"aspirin", "D001241"},
        {"ibuprofen", "D007052"}, {"cisplatin", "D002945"},
        {"metformin", "D008687"}, {"tamoxifen", "D013629"},
        {"β-lactam", "D047090"}, {"doxorubicin", "D004317"},
        {"paclitaxel", "D017239"}, {"imatinib", "D000068877"}}},
      {"Disease",
       {{"melanoma", "D008545"}, {"colorectal cancer", "D015179"},
        {"type 2 diabetes", "D003924"}, {"Sjögren syndrome", "D012859"},
        {"breast cancer", "D001943"}, {"asthma", "D001249"},
        {"hepatitis B", "D006509"}, {"Crohn’s disease", "D003424"},
        {"glioblastoma", "D005909"}}},
      {"Gene",
       {{"BRCA1", "672"}, {"TP53", "7157"}, {"IL-1β", "3553"},
        {"PD-L1", "29126"}, {"EGFR", "1956"}, {"KRAS", "3845"},
        {"HER2", "2064"}, {"TNF-α", "7124"}}},
      {"Species",
       {{"mice", "10090"}, {"patients", "9606"}, {"rats", "10116"},
        {"zebrafish", "7955"}, {"Escherichia coli", "562"}}},
      {"Anatomy",
       {{"liver", "UBERON:0002107"}, {"lung", "UBERON:0002048"},
        {"kidney", "UBERON:0002113"}, {"brain", "UBERON:0000955"},
        {"colon", "UBERON:0001155"}}},
      {"Year",
       {{"1998", ""}, {"2004", ""}, {"2011", ""}, {"2014", ""}, {"2019", ""}}},
  };
  return *vocab;
}

// Templates with {Type} slots. Each starts with an uppercase letter so the
// sentence splitter sees a boundary before it.
constexpr std::array<std::string_view, 10> kTemplates = {
    "Treatment with {Chemical} reduced {Gene} expression in {Species}.",
    "In {Year}, {Chemical} was approved for {Disease}.",
    "The {Anatomy} of {Species} with {Disease} showed high {Gene} levels.",
    "Loss of {Gene} was associated with {Disease} in the {Anatomy}.",
    "Combined {Chemical} and {Chemical} therapy improved survival in {Disease}.",
    "Since {Year}, {Gene} mutations have been linked to {Disease}.",
    "Expression of {Gene} in the {Anatomy} increased after {Chemical} exposure.",
    "A cohort of {Species} treated with {Chemical} developed {Disease}.",
    "These results suggest that {Gene} regulates {Anatomy} injury.",
    "Overall, {Chemical} was well tolerated by {Species}.",
};

constexpr std::array<std::string_view, 6> kTitles = {
    "Effects of {Chemical} on {Disease}",
    "{Gene} signaling in {Disease}",
    "A study of {Chemical} in {Species}",
    "Role of {Gene} in {Anatomy} disease",
    "Outcomes of {Disease} after {Chemical} therapy",
    "{Chemical} and {Gene} in {Year}",
};

const TypeVocab& VocabFor(std::string_view type) {
  for (const TypeVocab& v : Vocabulary()) {
    if (v.type == type) return v;
  }
  return Vocabulary().front();
}

// Expands a template into `text`, recording mentions with absolute
// code-point offsets starting at `base`.
void Expand(std::string_view tmpl, RngStream& rng, size_t base,
            std::string* text, std::vector<EntityMention>* mentions) {
  size_t chars = 0;
  while (!tmpl.empty()) {
    const size_t open = tmpl.find('{');
    const std::string_view literal = tmpl.substr(0, open);
    *text += literal;
    chars += CharLength(literal);
    if (open == std::string_view::npos) break;
    const size_t close = tmpl.find('}', open);
    const std::string_view type = tmpl.substr(open + 1, close - open - 1);
    const TypeVocab& vocab = VocabFor(type);
    const Term& term = vocab.terms[rng.Uniform(vocab.terms.size())];
    EntityMention m;
    m.start = base + chars;
    m.end = m.start + CharLength(term.surface);
    m.surface = std::string(term.surface);
    m.entity_type = std::string(type);
    m.norm_id = std::string(term.norm_id);
    mentions->push_back(std::move(m));
    *text += term.surface;
    chars += CharLength(term.surface);
    tmpl.remove_prefix(close + 1);
  }
}

}  // namespace

std::vector<AnnotatedDocument> MakeSyntheticCorpus(
    const SyntheticCorpusOptions& options) {
  std::vector<AnnotatedDocument> docs;
  docs.reserve(options.documents);
  for (size_t d = 0; d < options.documents; ++d) {
    AnnotatedDocument doc;
    doc.doc_id = std::to_string(30000000 + d);
    RngStream rng(options.seed, doc.doc_id);
    std::vector<EntityMention> title_mentions;
    Expand(kTitles[rng.Uniform(kTitles.size())], rng, 0, &doc.title,
           &title_mentions);
    const size_t body_base = CharLength(doc.title) + 1;
    const size_t span = options.max_sentences - options.min_sentences + 1;
    const size_t sentences = options.min_sentences + rng.Uniform(span);
    std::vector<EntityMention> body_mentions;
    for (size_t s = 0; s < sentences; ++s) {
      if (s > 0) doc.body += ' ';
      Expand(kTemplates[rng.Uniform(kTemplates.size())], rng,
             body_base + CharLength(doc.body), &doc.body, &body_mentions);
    }
    doc.text = JoinTitleBody(doc.title, doc.body);
    doc.mentions = std::move(title_mentions);
    for (EntityMention& m : body_mentions) doc.mentions.push_back(std::move(m));
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace biodenoise::testing
