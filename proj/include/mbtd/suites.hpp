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

#ifndef MBTD_SUITES_HPP
#define MBTD_SUITES_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mbtd/solver.hpp"

namespace mbtd {

struct SuiteOutcome
{
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

/// table1, noskip, blowup, tdom-implication, reductions, strategies, oracle.
const std::vector<std::string>& suite_names();

/**
 * Runs one property suite, writing a "PASS <case>" or "FAIL <case>: <why>" line
 * per case to `out`. Throws InvalidArgument for an unknown suite name.
 */
SuiteOutcome run_suite(std::string_view name, std::ostream& out, const SolveOptions& options = {});

}

#endif
