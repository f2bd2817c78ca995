/*
 * Copyright 2026 The mbtd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MBTD_TOOLS_CLI_HPP
#define MBTD_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mbtd::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

/// Runs one `mbtd` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}

#endif
