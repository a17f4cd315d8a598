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


#ifndef BIODENOISE_BIOASQ_CONVERTER_H_
#define BIODENOISE_BIOASQ_CONVERTER_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "biodenoise/dataset.h"
#include "biodenoise/qa_example.h"
#include "json.hpp"

namespace biodenoise {

enum class ContextSource { kSnippet, kAbstract };

std::string_view ContextSourceName(ContextSource source);
std::optional<ContextSource> ParseContextSource(std::string_view name);

struct BioasqSnippet {
  std::string text;
  std::string document;  // PubMed id
};

// One Task-B question. `answer_items` holds, per gold item, its synonym
// variants; factoid questions have exactly one item.
struct BioasqQuestion {
  std::string id;
  std::string type;  // yesno, factoid, list or summary
  std::string body;
  std::vector<BioasqSnippet> snippets;
  std::vector<std::string> documents;  // PubMed ids
  std::vector<std::vector<std::string>> answer_items;
  std::optional<YesNo> yesno_answer;
  bool has_exact_answer = false;
};

// "http://www.ncbi.nlm.nih.gov/pubmed/23329350" -> "23329350".
std::string PmidFromDocumentUrl(std::string_view url);

// Errors: InvalidArgument "MalformedJson: ...".
absl::StatusOr<std::vector<BioasqQuestion>> ParseBioasq(std::string_view json_text);

struct BioasqConvertOptions {
  ContextSource context_source = ContextSource::kSnippet;
  // PubMed id -> abstract text; required in abstract mode.
  const std::map<std::string, std::string>* abstracts = nullptr;
  // Drop documents without an abstract instead of failing.
  bool skip_missing_abstracts = false;
};

// One example per (question, context). Summary questions produce no examples
// but are counted in source_stats.questions. Span answers are aligned to the
// first case-insensitive occurrence of the first variant that occurs; pairs
// where no gold item aligns keep empty answers and meta.unalignable = true.
// Errors: MalformedJson; FailedPrecondition "MissingAbstract(<pmid>)".
absl::StatusOr<DatasetFile> ConvertBioasq(std::string_view json_text,
                                          const BioasqConvertOptions& options);

}  // namespace biodenoise

#endif  // BIODENOISE_BIOASQ_CONVERTER_H_
