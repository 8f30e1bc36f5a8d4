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
#include <vector>

#include "fixtures.hpp"
#include "peakcap/errors.hpp"
#include "peakcap/numerics.hpp"

using namespace peakcap;

TEST_CASE("log_cosh matches reference values and stays finite") {
    CHECK(log_cosh(1.0) == doctest::Approx(fixtures::kLogCosh1).epsilon(1e-15));
    CHECK(log_cosh(-0.5) == doctest::Approx(fixtures::kLogCosh0p5).epsilon(1e-15));
    CHECK(log_cosh(0.0) == 0.0);
    CHECK(log_cosh(1e-8) == doctest::Approx(0.5e-16).epsilon(1e-11));
    CHECK(log_cosh(1000.0) == doctest::Approx(1000.0 - std::log(2.0)).epsilon(1e-15));
    CHECK(std::isfinite(log_cosh(1e308)));
}

TEST_CASE("log_cosh_taylor orders") {
    const double x = 0.1;
    CHECK(log_cosh_taylor(x, 2) == doctest::Approx(x * x / 2));
    CHECK(std::fabs(log_cosh_taylor(x, 8) - log_cosh(x)) < 1e-12);
    CHECK(std::fabs(log_cosh_taylor(x, 8) - log_cosh(x)) < std::fabs(log_cosh_taylor(x, 4) - log_cosh(x)));
    CHECK_THROWS_AS(log_cosh_taylor(x, 3), DomainError);
    CHECK_THROWS_AS(log_cosh_taylor(1.5, 4), DomainError);
}

TEST_CASE("Gaussian affine moments") {
    CHECK(gaussian_affine_moment(0.0, 1.0, 4) == 3.0);
    CHECK(gaussian_affine_moment(2.0, 0.0, 3) == 8.0);
    // E[(1 + 2Y)^2] = 1 + 4
    CHECK(gaussian_affine_moment(1.0, 2.0, 2) == doctest::Approx(5.0));
}

TEST_CASE("Hermite rule integrates polynomials exactly") {
    for (int n : {2, 8, 64}) {
        const auto& rule = gauss_hermite_rule(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        double sum = 0.0;
        for (double w : rule.weights) {
            sum += w;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
    const QuadratureSpec spec = QuadratureSpec::hermite(64);
    CHECK(gaussian_expectation([](double y) { return y * y * y * y * y * y; }, spec) ==
          doctest::Approx(15.0).epsilon(1e-11));
    CHECK(gaussian_expectation([](double y) { return y * y * y; }, spec) == doctest::Approx(0.0));
    CHECK_THROWS_AS(gauss_hermite_rule(1), DomainError);
}

TEST_CASE("expected_log_cosh_affine against the reference integral") {
    CHECK(expected_log_cosh_affine(1.0, 1.0, QuadratureSpec{}) ==
          doctest::Approx(fixtures::kExpectedLogCosh1MinusY).epsilon(1e-11));
    CHECK(expected_log_cosh_affine(1.0, 1.0, QuadratureSpec::adaptive()) ==
          doctest::Approx(fixtures::kExpectedLogCosh1MinusY).epsilon(1e-10));
    // Series branch: E[log cosh(s - sqrt(s) Y)] = s/2 + s^2/4 + O(s^3).
    const double s = 1e-8;
    CHECK(expected_log_cosh_affine(s, std::sqrt(s), QuadratureSpec{}) == doctest::Approx(s / 2 + s * s / 4).epsilon(1e-14));
}

TEST_CASE("non-finite integrand names the node") {
    try {
        gaussian_expectation([](double y) { return y > 0.0 ? INFINITY : 0.0; }, QuadratureSpec{});
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(std::string(e.what()).find("node") != std::string::npos);
    }
}

TEST_CASE("QuadratureSpec validation") {
    CHECK_THROWS_AS(QuadratureSpec::hermite(1).validate(), DomainError);
    QuadratureSpec bad = QuadratureSpec::adaptive();
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_NOTHROW(QuadratureSpec{}.validate());
}

TEST_CASE("finite differences and Richardson") {
    const auto d = central_derivatives([](double x) { return std::sin(x); }, 0.3, 1e-4);
    CHECK(d.first == doctest::Approx(std::cos(0.3)).epsilon(1e-8));
    CHECK(d.second == doctest::Approx(-std::sin(0.3)).epsilon(1e-5));
    const auto f = central_derivatives([](double x) { return x - x * x; }, 0.0, 1e-3, Stencil::forward);
    CHECK(f.first == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(f.second == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK_THROWS_AS(central_derivatives([](double x) { return x; }, 0.0, 0.0), DomainError);

    // 1 + h + h^2 sampled at h = 1, 0.1, 0.01
    const std::vector<double> v{3.0, 1.11, 1.0101};
    CHECK(richardson_limit(v, 10.0, 2) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(to_db(10.0) == doctest::Approx(10.0));
}
