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
#include <numbers>

#include "fixtures.hpp"
#include "peakcap/errors.hpp"
#include "peakcap/wideband.hpp"

using namespace peakcap;

TEST_CASE("capacity cost function") {
    CHECK(capacity_cost_fn(0.0) == 0.0);
    CHECK(capacity_cost_fn(1e-4) == doctest::Approx(fixtures::kCapacityCost1em4).epsilon(1e-10));
    CHECK(capacity_cost_fn(1.0) == doctest::Approx(2.0 * fixtures::kRateAntipodal1).epsilon(1e-11));
    CHECK_THROWS_AS(capacity_cost_fn(-1.0), DomainError);
    // C(s) = s - s^2/2 + O(s^3)
    const auto d = central_derivatives([](double s) { return capacity_cost_fn(s); }, 0.0, 1e-3, Stencil::forward);
    CHECK(d.first == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(d.second == doctest::Approx(-1.0).epsilon(1e-2));
}

TEST_CASE("snr grid") {
    const auto g = default_snr_grid();
    REQUIRE(g.size() == 7);
    CHECK(g.front() == doctest::Approx(1e-1));
    CHECK(g.back() == doctest::Approx(1e-7));
}

TEST_CASE("minimum energy per bit") {
    const auto e = min_energy_per_bit();
    CHECK(e.nats_value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(e.bits_value == doctest::Approx(std::numbers::ln2).epsilon(1e-6));
    CHECK(e.db_value == doctest::Approx(10.0 * std::log10(std::numbers::ln2)).epsilon(1e-5));
    CHECK(e.per_use_nats_value == doctest::Approx(2.0 * e.nats_value));
    CHECK(e.table.size() == 7);
}

TEST_CASE("slopes") {
    CHECK(slope_from_derivatives({1.0, -2.0}) == doctest::Approx(1.0));
    CHECK(slope_from_derivatives({0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(slope_from_derivatives({1.0, 0.5}), NumericalError);
    CHECK(slope_s0() == doctest::Approx(2.0).epsilon(1e-3));
    const auto t = slope_region_tdma(1.0);
    CHECK(t.first == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(t.second == 0.0);
    const auto s = slope_region_successive(2.0, 0.5);
    CHECK(std::isfinite(s.first));
    CHECK(std::isfinite(s.second));
    CHECK_THROWS_AS(slope_region_successive(0.0), DomainError);
}

TEST_CASE("closed-form successive denominator") {
    // alpha = 1 reduces to the single-user expression.
    CHECK(successive_slope_denominator(1.0, 3.0) == doctest::Approx(0.5));
    CHECK(successive_slope_denominator(0.5, 1.0) == doctest::Approx(0.5 * (0.5 + 0.25 * 16 + 0.0 - 0.5)));
}

TEST_CASE("GMAC energy limits and TDMA gaps") {
    const auto [e1, e2] = gmac_min_energy(0.5, 1.0);
    CHECK(e1 == doctest::Approx(-1.5917).epsilon(1e-3));
    CHECK(e2 == doctest::Approx(-1.5917).epsilon(1e-3));
    const auto gap = tdma_energy_gap(0.25);
    CHECK(gap.first == doctest::Approx(10.0 * std::log10(4.0)).epsilon(1e-3));
    CHECK(gap.second == doctest::Approx(10.0 * std::log10(4.0 / 3.0)).epsilon(1e-2));
    CHECK_THROWS_AS(tdma_energy_gap(0.0), DomainError);
}

TEST_CASE("wideband report") {
    WidebandRequest req;
    req.alphas = {0.5};
    req.thetas = {1.0, 2.0};
    const auto r = wideband_report(req);
    CHECK(r.energy_points.size() == 2);
    CHECK(r.slope_points.size() == 2);
    CHECK(r.tdma_gaps.size() == 1);
    CHECK(r.tdma_gap_db.first == doctest::Approx(3.0103).epsilon(1e-3));
    CHECK_THROWS_AS(wideband_report(WidebandRequest{{}, {1.0}}), DomainError);
}
