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

#include "peakcap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>

namespace peakcap::verify {

std::vector<const Check*> select(const std::vector<std::string>& filters) {
    std::vector<const Check*> out;
    auto wanted = [&](const Check& c) {
        return filters.empty() || std::find(filters.begin(), filters.end(), c.id) != filters.end() ||
               std::find(filters.begin(), filters.end(), c.group) != filters.end();
    };
    for (const auto* list : {&acceptance_checks(), &invariant_checks()}) {
        for (const Check& c : *list) {
            if (wanted(c)) {
                out.push_back(&c);
            }
        }
    }
    return out;
}

CheckResult run_check(const Check& check, const QuadratureSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = check.run(spec);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = check.id;
    r.title = check.title;
    r.budget = check.budget;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget > 0.0 && r.seconds > r.budget) {
        r.passed = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "; over budget (%.1f s > %.0f s)", r.seconds, r.budget);
        r.detail += buf;
    }
    return r;
}

std::string format_line(const CheckResult& r) {
    char head[160];
    std::snprintf(head, sizeof head, "[%s] %-4s %s (%.2f s): ", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                  r.title.c_str(), r.seconds);
    return head + r.detail;
}

} // namespace peakcap::verify
