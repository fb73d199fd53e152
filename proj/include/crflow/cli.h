// Copyright 2026 The crflow Authors
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

#ifndef CRFLOW_CLI_H_
#define CRFLOW_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace crflow::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad command line or unwritable output
  kParse = 2,       // unreadable or malformed input document
  kValidation = 3,  // input breaks a model invariant
  kRejected = 4,    // composition rule chose reject
  kBadQuery = 5,    // query names an unknown or malformed interface
};

// Runs one crflow invocation. `args` excludes the program name. Machine
// output goes to `out` (or the -o path), human diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace crflow::cli

#endif  // CRFLOW_CLI_H_
