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

// Runs the acceptance criteria and prints one line per criterion.
// Arguments select criteria by id (c1 ... c11); none runs all of them.

#include <cstdio>
#include <string>
#include <vector>

#include "peakcap/verify.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> wanted(argv + 1, argv + argc);
    const peakcap::QuadratureSpec spec;
    int failed = 0;
    int ran = 0;
    for (const auto& check : peakcap::verify::acceptance_checks()) {
        bool selected = wanted.empty();
        for (const auto& w : wanted) {
            selected = selected || w == check.id;
        }
        if (!selected) {
            continue;
        }
        const auto r = peakcap::verify::run_check(check, spec);
        std::printf("%s\n", peakcap::verify::format_line(r).c_str());
        std::fflush(stdout);
        ++ran;
        failed += r.passed ? 0 : 1;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no acceptance criterion matched\n");
        return 1;
    }
    std::printf("%d/%d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
