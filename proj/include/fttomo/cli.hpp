// Copyright 2026 The fttomo Authors
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

namespace fttomo::cli {

/// Stable exit-code contract of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kValidationError = 2,
    kUnidentifiable = 3,
};

/// Runs the `fttomo` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker threads for parallel commands: FTT_THREADS if set and positive,
/// otherwise the hardware concurrency.
unsigned thread_budget();

} // namespace fttomo::cli
