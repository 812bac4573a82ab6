// Copyright 2026 The rumourlab Authors.
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

#include <iosfwd>
#include <string>
#include <vector>

namespace rumourlab::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kInternalError = 2 };

// Runs one command line (without the program name). Data goes to `out`,
// progress and diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Gradient checks and oracle suites; prints one `PASS <suite>` or
// `FAIL <suite>: <detail>` line per suite. Returns true when all pass.
bool run_selftest(std::ostream& out);

}  // namespace rumourlab::cli
