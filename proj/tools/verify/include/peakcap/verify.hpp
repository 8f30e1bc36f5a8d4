// SPDX-License-Identifier: Apache-2.0
//
// peakcap: capacity and energy-per-bit toolkit for the peak-power limited
// two-user Gaussian multiple-access channel
// Copyright (C) 2026 The peakcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "peakcap/numerics.hpp"

namespace peakcap::verify {

struct CheckResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    /// Wall-clock budget in seconds; 0 when none applies.
    double budget = 0.0;
};

struct Check {
    std::string id;
    std::string group;
    std::string title;
    double budget = 0.0;
    std::function<CheckResult(const QuadratureSpec&)> run;
};

/// Acceptance criteria 1-11, ids "c1" ... "c11", group "acceptance".
const std::vector<Check>& acceptance_checks();

/// Module invariants, grouped by module name.
const std::vector<Check>& invariant_checks();

/// Checks whose id or group appears in `filters`; everything when empty.
std::vector<const Check*> select(const std::vector<std::string>& filters);

/// Runs one check, timing it and turning exceptions into failures. A check
/// that passes its numeric test but overruns its budget is a failure.
CheckResult run_check(const Check& check, const QuadratureSpec& spec);

/// One line: "[PASS] c1  title (1.23 s): detail".
std::string format_line(const CheckResult& r);

} // namespace peakcap::verify
