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


#ifndef BIODENOISE_DATASET_H_
#define BIODENOISE_DATASET_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "biodenoise/qa_example.h"
#include "json.hpp"

namespace biodenoise {

inline constexpr std::string_view kDatasetVersion = "biodenoise-qa/1";

// Example counts. Always a recount of DatasetFile::examples.
struct DatasetStats {
  std::map<std::string, size_t> by_question_type;
  std::map<std::string, size_t> by_provenance;
  size_t total = 0;

  static DatasetStats Count(std::span<const QAExample> examples);
  nlohmann::json ToJson() const;

  bool operator==(const DatasetStats&) const = default;
};

// The unified QA dataset file:
//
//   {"examples": [{"answers": [{"answer_start", "text"}], "context", "id",
//                  "meta", "provenance", "question", "question_type",
//                  "yesno_label"?}],
//    "run": {...}, "source_stats": {...}, "stats": {...}, "version": "..."}
//
// Keys are sorted and examples are ordered by id.
struct DatasetFile {
  std::string version = std::string(kDatasetVersion);
  std::vector<QAExample> examples;
  DatasetStats stats;
  // Converter counters that cannot be recounted from the examples, such as
  // the per-type question counts of the source (summary questions included).
  nlohmann::json source_stats = nlohmann::json::object();
  // Reproducibility header written by the command-line tool.
  nlohmann::json run = nlohmann::json::object();

  bool operator==(const DatasetFile&) const = default;
};

// Sorts by id and fills in stats.
DatasetFile MakeDataset(std::vector<QAExample> examples,
                        nlohmann::json source_stats = nlohmann::json::object());

nlohmann::json ExampleToJson(const QAExample& example);

// Errors are InvalidArgument "SchemaViolation(<where>, <field>): ...".
absl::StatusOr<QAExample> ExampleFromJson(const nlohmann::json& json,
                                          std::string_view where);

// Canonical text: examples sorted by id, one per line, sorted keys, stats
// recounted, trailing newline.
std::string SerializeDataset(const DatasetFile& dataset);

// Validates every example, id uniqueness and ordering, and that `stats`
// matches a recount.
absl::StatusOr<DatasetFile> ParseDataset(std::string_view text,
                                         std::string_view path = "<memory>");

absl::Status WriteDataset(const DatasetFile& dataset, const std::string& path);
absl::StatusOr<DatasetFile> ReadDataset(const std::string& path);

}  // namespace biodenoise

#endif  // BIODENOISE_DATASET_H_
