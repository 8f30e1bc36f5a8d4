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

#include <benchmark/benchmark.h>

#include "peakcap/channel.hpp"
#include "peakcap/distributions.hpp"
#include "peakcap/numerics.hpp"

namespace {

using namespace peakcap;

void BM_ExpectedLogCosh(benchmark::State& state) {
    const QuadratureSpec spec;
    double rho = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(expected_log_cosh_affine(rho, 0.7, spec));
        rho += 1e-9;
    }
}
BENCHMARK(BM_ExpectedLogCosh);

void BM_JointMutualInformation(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const DiscreteDistribution d1 = uniform_grid(k, 1.0);
    const DiscreteDistribution d2 = uniform_grid(k, 1.0);
    const QuadratureSpec spec;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mutual_information_joint(d1, d2, 0.5, spec));
    }
}
BENCHMARK(BM_JointMutualInformation)->RangeMultiplier(2)->Range(2, 64)->Unit(benchmark::kMicrosecond);

} // namespace
