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


#ifndef BIODENOISE_FILE_UTIL_H_
#define BIODENOISE_FILE_UTIL_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace biodenoise {

// I/O failures come back as NotFound, PermissionDenied or Unavailable so
// callers can tell them apart from data errors.
absl::StatusOr<std::string> ReadFile(const std::string& path);

// Writes to a temporary file next to `path`, then renames it over `path`.
// Readers never observe a partially written file.
absl::Status WriteFileAtomic(const std::string& path, std::string_view content);

std::string Sha256Hex(std::string_view data);

bool IsIoError(const absl::Status& status);

}  // namespace biodenoise

#endif  // BIODENOISE_FILE_UTIL_H_
