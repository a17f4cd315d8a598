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


#ifndef BIODENOISE_CLI_H_
#define BIODENOISE_CLI_H_

#include <ostream>

#include "absl/status/status.h"

namespace biodenoise {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitIo = 4;

// Environment variable naming a TOML/INI config file; --config wins.
inline constexpr char kConfigEnvVar[] = "BIODENOISE_CONFIG";

// 0 for OK, 4 for I/O failures, 3 for everything else.
int ExitCodeFor(const absl::Status& status);

// Runs the biodenoise command line. Normal output goes to `out`; logs, the
// reproducibility header and errors go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace biodenoise

#endif  // BIODENOISE_CLI_H_
