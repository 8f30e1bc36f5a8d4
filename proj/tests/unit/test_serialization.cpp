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

#include <sstream>

#include "peakcap/errors.hpp"
#include "peakcap/serialization.hpp"

using namespace peakcap;

TEST_CASE("distribution JSON round trip") {
    const auto d = make_distribution({-0.3, 0.1, 0.7}, {0.2, 0.3, 0.5}, 0.7);
    const auto j = to_json(d);
    CHECK(j.at("points").size() == 3);
    const auto back = distribution_from_json(j);
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(back.points()[i] == d.points()[i]);
        CHECK(back.probs()[i] == d.probs()[i]);
    }
    CHECK(back.peak_bound() == d.peak_bound());
    CHECK_THROWS(distribution_from_json(nlohmann::json{{"points", {0.0}}}));
}

TEST_CASE("BaResult JSON and trace CSV") {
    BaConfig c;
    c.k1 = 3;
    c.k2 = 3;
    c.max_iters = 5;
    const BaResult r = run_ba(c);
    const auto j = to_json(r);
    for (const char* key : {"dist1", "dist2", "achieved_mi", "achieved_mi_bits", "trace", "iterations", "converged"}) {
        CHECK(j.contains(key));
    }
    std::ostringstream os;
    write_trace_csv(os, r);
    const std::string csv = os.str();
    CHECK(csv.rfind("iteration,mi\n0,", 0) == 0);
}

TEST_CASE("region and convergence CSV") {
    const std::vector<double> alphas{0.0, 1.0};
    const std::vector<RegionSample> s{tdma_region(0.6, 0.4, alphas)};
    std::ostringstream os;
    write_region_csv(os, s);
    CHECK(os.str().rfind("alpha,r1,r2,kind,units\n0,0,", 0) == 0);
    CHECK(os.str().find(",tdma,nats_per_sec_2w1\n") != std::string::npos);

    std::ostringstream t;
    const std::vector<ConvergenceRow> rows{{0.1, 1.5}};
    write_convergence_csv(t, rows);
    CHECK(t.str() == "snr,estimate\n0.1,1.5\n");
}

TEST_CASE("double formatting round-trips") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-300) == "1e-300");
    const double x = 0.54180315956572100121;
    CHECK(std::stod(format_double(x)) == x);
}
