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

#include <iosfwd>
#include <span>

#include <nlohmann/json.hpp>

#include "peakcap/ba.hpp"
#include "peakcap/distributions.hpp"
#include "peakcap/regions.hpp"
#include "peakcap/wideband.hpp"

namespace peakcap {

/// {"points": [...], "probs": [...], "peak_bound": x}
nlohmann::json to_json(const DiscreteDistribution& d);
/// Inverse of to_json; validation as in make_distribution.
DiscreteDistribution distribution_from_json(const nlohmann::json& j);

/// {"dist1", "dist2", "achieved_mi", "achieved_mi_bits", "trace", "iterations", "converged", "monotone"}
nlohmann::json to_json(const BaResult& r);

nlohmann::json to_json(const WidebandReport& r);

/// Header `iteration,mi`.
void write_trace_csv(std::ostream& os, const BaResult& r);

/// Header `alpha,r1,r2,kind,units`.
void write_region_csv(std::ostream& os, std::span<const RegionSample> samples);

/// Header `snr,estimate`.
void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows);

/// Shortest decimal form that round-trips.
std::string format_double(double x);

} // namespace peakcap
