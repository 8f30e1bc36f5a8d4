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
#include "peakcap/channel.hpp"
#include "peakcap/errors.hpp"

using namespace peakcap;

namespace {

const QuadratureSpec kSpec{};

GaussianMixture tri_mixture() { return GaussianMixture::make({-2.0, 0.0, 2.0}, {0.25, 0.5, 0.25}, 1.0); }

} // namespace

TEST_CASE("mixture construction") {
    CHECK_THROWS_AS(GaussianMixture::make({0.0, 0.0}, {0.5, 0.5}, 1.0), DomainError);
    CHECK_THROWS_AS(GaussianMixture::make({0.0, 1.0}, {0.5, 0.4}, 1.0), DomainError);
    CHECK_THROWS_AS(GaussianMixture::make({}, {}, 1.0), DomainError);
    const auto m = output_mixture(antipodal(1.0), antipodal(1.0), 0.5);
    CHECK(m.size() == 3);
    CHECK(m.sigma() == 0.5);
}

TEST_CASE("log density and entropy of a three-component mixture") {
    const auto m = tri_mixture();
    CHECK(log_density(m, 10.0) == doctest::Approx(fixtures::kTriMixtureLogDensityAt10).epsilon(1e-11));
    CHECK(differential_entropy(m, kSpec) == doctest::Approx(fixtures::kTriMixtureEntropy).epsilon(1e-11));
    CHECK(differential_entropy(m, QuadratureSpec::adaptive()) ==
          doctest::Approx(fixtures::kTriMixtureEntropy).epsilon(1e-10));
    CHECK(std::isfinite(log_density(m, 1e6)));
    CHECK(gaussian_entropy(1.0) == doctest::Approx(0.5 * std::log(2 * std::numbers::pi * std::numbers::e)));
}

TEST_CASE("lattice and generic paths agree") {
    // Lattice layout vs the same mixture evaluated at an off-lattice centre.
    const auto m = output_mixture(uniform_grid(11, 1.0), uniform_grid(11, 1.0), 0.3);
    const std::vector<double> centers(m.means().begin(), m.means().end());
    const auto fast = expected_log_density(m, centers, kSpec);
    for (std::size_t i = 0; i < centers.size(); i += 4) {
        const double shifted = centers[i] + 1e-9;
        const auto slow = expected_log_density(m, std::vector<double>{shifted}, kSpec);
        CHECK(fast[i] == doctest::Approx(slow[0]).epsilon(1e-7));
    }
}

TEST_CASE("antipodal mutual information against reference values") {
    CHECK(mutual_information_joint(antipodal(1.0), antipodal(1.0), 1.0, kSpec) ==
          doctest::Approx(fixtures::kJointMiAntipodal11).epsilon(1e-11));
    const auto a = antipodal(0.36);
    const auto b = antipodal(0.16);
    CHECK(mutual_information_joint(a, b, 1.0, kSpec) ==
          doctest::Approx(fixtures::kJointMiAntipodal0p36_0p16).epsilon(1e-11));
    CHECK(mi_user1_marginal(a, b, 1.0, kSpec) ==
          doctest::Approx(fixtures::kMarginalMiAntipodal0p36_0p16).epsilon(1e-11));
    CHECK(mi_user2_marginal(a, b, 1.0, kSpec) ==
          doctest::Approx(fixtures::kMarginalMiAntipodal0p16_0p36).epsilon(1e-11));
    CHECK(conditional_mi_user1(antipodal(1.0), b, 1.0, kSpec) ==
          doctest::Approx(fixtures::kRateAntipodal1).epsilon(1e-11));
    CHECK(conditional_mi_user2(b, antipodal(0.36), 1.0, kSpec) ==
          doctest::Approx(fixtures::kRateAntipodal0p36).epsilon(1e-11));
}

TEST_CASE("degenerate inputs carry no information") {
    CHECK(mutual_information_joint(degenerate(), degenerate(), 1.0, kSpec) == 0.0);
    CHECK(mi_user1_marginal(degenerate(), antipodal(1.0), 1.0, kSpec) == doctest::Approx(0.0));
}

TEST_CASE("KL divergence of a point against the output law") {
    const auto m = output_mixture(antipodal(1.0), antipodal(1.0), 1.0);
    CHECK(kl_point_to_output(1.0, 1.0, m, kSpec) > 0.0);
    // The average over inputs is the mutual information.
    double avg = 0.0;
    for (double x1 : {-1.0, 1.0}) {
        for (double x2 : {-1.0, 1.0}) {
            avg += 0.25 * kl_point_to_output(x1, x2, m, kSpec);
        }
    }
    CHECK(avg == doctest::Approx(fixtures::kJointMiAntipodal11).epsilon(1e-11));
}

TEST_CASE("Monte Carlo estimator") {
    const auto a = antipodal(1.0);
    const auto r1 = monte_carlo_mi(a, a, 1.0, 200000, 3);
    const auto r2 = monte_carlo_mi(a, a, 1.0, 200000, 3);
    CHECK(r1.estimate == r2.estimate);
    CHECK(std::fabs(r1.estimate - fixtures::kJointMiAntipodal11) < 4 * r1.std_error);
    const auto d = monte_carlo_mi(degenerate(), degenerate(), 1.0, 10000, 1);
    CHECK(d.estimate == 0.0);
    CHECK(d.std_error == 0.0);
    CHECK_THROWS_AS(monte_carlo_mi(a, a, 1.0, 100, 1), DomainError);
}

TEST_CASE("GmacModel validation") {
    CHECK_NOTHROW(GmacModel{}.validate());
    CHECK_THROWS_AS((GmacModel{1.0, 1.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((GmacModel{-1.0, 1.0, 1.0}.validate()), DomainError);
}
