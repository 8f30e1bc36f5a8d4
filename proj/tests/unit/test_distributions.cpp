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

#include "peakcap/distributions.hpp"
#include "peakcap/errors.hpp"

using namespace peakcap;

TEST_CASE("make sorts, merges and validates") {
    const auto d = make_distribution({0.5, -0.5, 0.5 + 1e-14}, {0.25, 0.5, 0.25}, 1.0);
    REQUIRE(d.size() == 2);
    CHECK(d.points()[0] == -0.5);
    CHECK(d.probs()[1] == doctest::Approx(0.5));
    CHECK_THROWS_AS(make_distribution({0.0, 2.0}, {0.5, 0.5}, 1.0), DomainError);
    CHECK_THROWS_AS(make_distribution({0.0, 0.1}, {0.5, 0.6}, 1.0), DomainError);
    CHECK_THROWS_AS(make_distribution({0.0, 0.1}, {-0.1, 1.1}, 1.0), DomainError);
    CHECK_THROWS_AS(make_distribution({0.0}, {0.5, 0.5}, 1.0), DomainError);
    CHECK_THROWS_AS(make_distribution({}, {}, 1.0), DomainError);
}

TEST_CASE("standard laws") {
    const auto a = antipodal(0.36);
    REQUIRE(a.size() == 2);
    CHECK(a.points()[1] == doctest::Approx(0.6));
    CHECK(a.mean() == doctest::Approx(0.0));
    CHECK(a.variance() == doctest::Approx(0.36));
    const auto g = uniform_grid(51, 1.0);
    CHECK(g.size() == 51);
    CHECK(g.points()[25] == 0.0);
    CHECK(g.points()[0] == -g.points()[50]);
    CHECK(g.max_prob() == doctest::Approx(1.0 / 51));
    CHECK(degenerate().variance() == 0.0);
    CHECK_THROWS_AS(uniform_grid(1, 1.0), DomainError);
    CHECK_THROWS_AS(antipodal(0.0), DomainError);
}

TEST_CASE("convolution of antipodal laws") {
    const auto u = convolve(antipodal(1.0), antipodal(1.0));
    REQUIRE(u.size() == 3);
    CHECK(u.probs()[1] == doctest::Approx(0.5));
    CHECK(u.peak_bound() == doctest::Approx(2.0));
    const auto v = convolve(antipodal(0.36), antipodal(0.16));
    CHECK(v.size() == 4);
    CHECK(convolve(v, degenerate()).size() == 4);
}

TEST_CASE("prune") {
    const auto d = make_distribution({-1.0, 0.0, 1.0}, {0.4999995, 1e-6, 0.4999995}, 1.0);
    const auto p = prune(d, 1e-5);
    REQUIRE(p.size() == 2);
    CHECK(p.probs()[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(prune(d, 0.6), DomainError);
}
