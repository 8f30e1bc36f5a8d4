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

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include <cmath>
#include <vector>

#include "peakcap/distributions.hpp"
#include "peakcap/verify.hpp"

namespace peakcap::verify {

/// Collects sub-checks of one criterion into a pass flag and a detail line.
class Outcome {
public:
    void expect(bool ok, const std::string& what) {
        passed_ = passed_ && ok;
        append(ok ? what : "FAIL " + what);
    }
    void note(const std::string& what) { append(what); }
    [[nodiscard]] CheckResult result() const { return {{}, {}, passed_, detail_.str(), 0.0, 0.0}; }

private:
    void append(const std::string& s) {
        if (!first_) {
            detail_ << "; ";
        }
        first_ = false;
        detail_ << s;
    }
    bool passed_ = true;
    bool first_ = true;
    std::ostringstream detail_;
};

inline std::string fmt(double v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

/// Uniform on [0, 1) from the raw engine output, independent of the
/// library's distribution implementations.
inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Two to six points drawn uniformly on the peak interval, random masses.
inline DiscreteDistribution random_distribution(std::mt19937_64& rng, double rho) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const double a = std::sqrt(rho);
    std::vector<double> pts;
    std::vector<double> prs;
    for (int i = 0; i < k; ++i) {
        pts.push_back(a * (2.0 * unit(rng) - 1.0));
        prs.push_back(0.05 + unit(rng));
    }
    double total = 0.0;
    for (double p : prs) {
        total += p;
    }
    for (double& p : prs) {
        p /= total;
    }
    return make_distribution(std::move(pts), std::move(prs), a);
}

} // namespace peakcap::verify
