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


#ifndef BIODENOISE_PUBMEDQA_CONVERTER_H_
#define BIODENOISE_PUBMEDQA_CONVERTER_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "biodenoise/dataset.h"

namespace biodenoise {

// Converts a PubMedQA labeled file,
//
//   {"<pmid>": {"QUESTION": "...", "CONTEXTS": ["...", ...],
//               "final_decision": "yes" | "no" | "maybe", ...}, ...}
//
// into yes/no examples. The context is the CONTEXTS paragraphs joined by a
// space. "maybe" instances are dropped and counted in
// source_stats.dropped_maybe. Errors: InvalidArgument "MalformedJson: ...".
absl::StatusOr<DatasetFile> ConvertPubmedqa(std::string_view json_text);

}  // namespace biodenoise

#endif  // BIODENOISE_PUBMEDQA_CONVERTER_H_
