// Copyright 2026 The Magic Toolkit Authors
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

#pragma once

#include <string>
#include <vector>

#include "magic/json_io.hpp"

namespace magic {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNo = 2;
inline constexpr int kExitPromise = 3;

struct CliResult {
  int exit_code = kExitOk;
  Json report;
  // Where the report goes; empty means stdout.
  std::string report_path;
  // Help text, printed instead of a report when set.
  std::string help;
};

// args excludes the program name.
CliResult dispatch(const std::vector<std::string>& args);

// Full entry point: dispatch, then write the report and return the exit code.
int run_cli(int argc, char** argv);

}  // namespace magic
