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

#include <doctest.h>

#include <cmath>
#include <string>

#include "fixtures.hpp"
#include "peakcap/diagnostics.hpp"
#include "peakcap/errors.hpp"
#include "peakcap/regions.hpp"

using namespace peakcap;

TEST_CASE("closed-form antipodal rates") {
    CHECK(rate_antipodal(1.0) == doctest::Approx(fixtures::kRateAntipodal1).epsilon(1e-11));
    CHECK(rate_antipodal(0.36) == doctest::Approx(fixtures::kRateAntipodal0p36).epsilon(1e-11));
    CHECK(sum_rate_antipodal(0.36, 0.16) == doctest::Approx(fixtures::kSumRateAntipodal0p36_0p16).epsilon(1e-11));
    CHECK(sum_rate_antipodal(1.0, 1.0) == doctest::Approx(fixtures::kSumRateAntipodal11).epsilon(1e-11));
    CHECK(sum_rate_antipodal(0.36, 0.16) == doctest::Approx(sum_rate_antipodal(0.16, 0.36)).epsilon(1e-15));
}

TEST_CASE("corner points close the sum rate") {
    const double s = sum_rate_antipodal(0.36, 0.16);
    CHECK(corner_mi(0.36, 0.16) + rate_antipodal(0.16) == doctest::Approx(s).epsilon(1e-14));
    CHECK(corner_mi(0.16, 0.36) + rate_antipodal(0.36) == doctest::Approx(s).epsilon(1e-14));
    CHECK(corner_mi(0.36, 0.16) <= rate_antipodal(0.36));
}

TEST_CASE("sum rate is a lower bound on the joint information") {
    // I(X1 + X2; Y | sign) versus the exact joint value for equal powers.
    CHECK(sum_rate_antipodal(1.0, 1.0) < fixtures::kJointMiAntipodal11);
    CHECK(sum_rate_antipodal(0.36, 0.16) < fixtures::kJointMiAntipodal0p36_0p16);
}

TEST_CASE("domain modes") {
    CHECK_THROWS_AS(rate_antipodal(1.2), DomainError);
    CHECK_THROWS_AS(rate_antipodal(0.0), DomainError);
    int warnings = 0;
    const auto previous = set_warning_handler([&](std::string_view) { ++warnings; });
    const double v = rate_antipodal(4.0, DomainMode::permissive);
    set_warning_handler(previous);
    CHECK(warnings == 1);
    CHECK(v > rate_antipodal(1.0));
}

TEST_CASE("alpha grid") {
    const auto g = alpha_grid(3);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 0.0);
    CHECK(g[1] == 0.5);
    CHECK(g[2] == 1.0);
    CHECK(alpha_grid(1) == std::vector<double>{0.5});
    CHECK_THROWS_AS(alpha_grid(0), DomainError);
}

TEST_CASE("region samples carry kinds and units") {
    const auto alphas = alpha_grid(3);
    const auto s = successive_region(0.6, 0.4, alphas);
    const auto t = tdma_region(0.6, 0.4, alphas);
    const auto g = gaussian_baseline_region(0.6, 0.4, alphas);
    CHECK(s.pairs.size() == 3);
    CHECK(t.pairs.size() == 3);
    CHECK(g.pairs.size() == 3);
    CHECK(s.kind == RegionKind::successive);
    CHECK(to_string(t.kind) == "tdma");
    CHECK(to_string(g.kind) == "gaussian_baseline");
    CHECK(to_string(s.units) == "nats_per_sec_2w1");
    CHECK(t.pairs[0].r1 == 0.0);
    CHECK(t.pairs[2].r1 == doctest::Approx(2.0 * rate_antipodal(0.6)));
    CHECK(t.pairs[1].r1 < s.pairs[1].r1);
    CHECK(t.pairs[1].r2 < s.pairs[1].r2);
}

TEST_CASE("Gaussian baseline and bandwidth limits") {
    CHECK(gaussian_sum_rate(1.0, 2.0) == doctest::Approx(0.5 * std::log(4.0)));
    const std::vector<double> w{1.0, 1e6};
    const auto r = infinite_bw_rate(2.0, 1.0, w);
    CHECK(r[1].second == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(r[0].second < r[1].second);
    CHECK(succ_tdma_ratio(1.0, 3.0, 0.25) == doctest::Approx(4.0 / 2.5));
    CHECK(succ_tdma_ratio(1.0, 1.0, 0.5) == 2.0);
    CHECK_THROWS_AS(succ_tdma_ratio(1.0, 1.0, 1.0), DomainError);
}
