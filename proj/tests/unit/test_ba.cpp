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

#include "fixtures.hpp"
#include "peakcap/ba.hpp"
#include "peakcap/channel.hpp"
#include "peakcap/diagnostics.hpp"
#include "peakcap/errors.hpp"

using namespace peakcap;

TEST_CASE("config validation names the field") {
    BaConfig c;
    c.sigma = 0.0;
    try {
        c.validate();
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("sigma") != std::string::npos);
    }
    c = BaConfig{};
    c.k2 = 1;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("k2"), DomainError);
    c = BaConfig{};
    c.epsilon = 0.0;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("epsilon"), DomainError);
}

TEST_CASE("initial distributions") {
    const auto r = ba_initial_distribution(11, 1.0, BaInit::random, 42);
    CHECK(r.size() == 11);
    CHECK(r.max_prob() < 1.0);
    const auto again = ba_initial_distribution(11, 1.0, BaInit::random, 42);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.probs()[i] == again.probs()[i]);
    }
    const auto a = ba_initial_distribution(11, 1.0, BaInit::antipodal, 0);
    CHECK(a.probs().front() == doctest::Approx(0.4995));
    CHECK(a.probs()[5] > 0.0);
    CHECK(ba_initial_distribution(11, 1.0, BaInit::uniform, 0).max_prob() == doctest::Approx(1.0 / 11));
}

TEST_CASE("antipodal pair is a fixed point at sigma = 1") {
    const auto a = antipodal(1.0);
    const auto u1 = ba_update_user1(a, a, 1.0, QuadratureSpec{});
    CHECK(u1.probs()[0] == doctest::Approx(0.5));
    const BaResult r = run_ba_from(a, a, 1.0, 1e-12, 10, QuadratureSpec{});
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    CHECK(r.achieved_mi == doctest::Approx(fixtures::kJointMiAntipodal11).epsilon(1e-12));
}

TEST_CASE("small run is monotone, deterministic and reports the last trace value") {
    BaConfig c;
    c.k1 = 9;
    c.k2 = 7;
    c.sigma = 0.7;
    c.max_iters = 300;
    const BaResult r = run_ba(c);
    const BaResult s = run_ba(c);
    CHECK(r.monotone);
    CHECK(r.trace.size() == static_cast<std::size_t>(r.iterations) + 1);
    CHECK(r.achieved_mi == r.trace.back());
    CHECK(r.achieved_mi == s.achieved_mi);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        CHECK(r.trace[i] >= r.trace[i - 1] - 1e-10);
    }
    CHECK(r.achieved_mi == doctest::Approx(mutual_information_joint(r.dist1, r.dist2, 0.7, QuadratureSpec{})).epsilon(1e-12));
}

TEST_CASE("iteration cap reports non-convergence") {
    BaConfig c;
    c.k1 = 15;
    c.k2 = 15;
    c.sigma = 0.3;
    c.max_iters = 3;
    const BaResult r = run_ba(c);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
}

TEST_CASE("warnings can be redirected") {
    std::string seen;
    const auto previous = set_warning_handler([&](std::string_view m) { seen = m; });
    warn("probe");
    set_warning_handler(previous);
    CHECK(seen == "probe");
}
