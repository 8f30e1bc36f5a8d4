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

#include "peakcap/ba.hpp"
#include "peakcap/distributions.hpp"

namespace {

using namespace peakcap;

void BM_BaUserStep(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const DiscreteDistribution d1 = uniform_grid(k, 1.0);
    const DiscreteDistribution d2 = uniform_grid(k, 1.0);
    const QuadratureSpec spec;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ba_update_user1(d1, d2, 0.5, spec));
    }
}
BENCHMARK(BM_BaUserStep)->Arg(11)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_BaFullRun(benchmark::State& state) {
    BaConfig config;
    config.sigma = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_ba(config));
    }
}
BENCHMARK(BM_BaFullRun)->Unit(benchmark::kMillisecond)->Iterations(3);

} // namespace
