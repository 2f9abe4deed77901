/** Copyright 2026 The pathkeep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PATHKEEP_TOOLS_CLI_H_
#define PATHKEEP_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pathkeep::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDataError = 1,
  kExitUsageError = 2,
  kExitScorerError = 3,
};

/// Runs the pathkeep command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathkeep::cli

#endif  // PATHKEEP_TOOLS_CLI_H_
