// Copyright 2026 The Ada-MAC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADAMAC_TOOLS_CLI_H_
#define ADAMAC_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "adamac/frames.h"

namespace adamac::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kInternalError = 2,
};

// Environment variable naming the directory CSV output goes to when no
// --out is given. Unset means stdout.
inline constexpr const char* kOutDirEnv = "ADAMAC_OUT_DIR";

// "1..5", "1,2,7" or "3". Throws ConfigError.
std::vector<uint64_t> ParseSeeds(std::string_view text);

// Whitespace-separated rows of "mac_address length burst periodic"; '#'
// starts a comment. Throws ConfigError naming the line.
std::vector<GtsRequestFrame> ParseRequestTable(std::string_view text);

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adamac::cli

#endif  // ADAMAC_TOOLS_CLI_H_
