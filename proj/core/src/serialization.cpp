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

#include "peakcap/serialization.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "peakcap/errors.hpp"

namespace peakcap {
namespace {

nlohmann::json pair_json(const std::pair<double, double>& p) {
    return nlohmann::json::array({p.first, p.second});
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

nlohmann::json to_json(const DiscreteDistribution& d) {
    return {{"points", std::vector<double>(d.points().begin(), d.points().end())},
            {"probs", std::vector<double>(d.probs().begin(), d.probs().end())},
            {"peak_bound", d.peak_bound()}};
}

DiscreteDistribution distribution_from_json(const nlohmann::json& j) {
    try {
        return make_distribution(j.at("points").get<std::vector<double>>(), j.at("probs").get<std::vector<double>>(),
                                 j.at("peak_bound").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("distribution JSON: ") + e.what());
    }
}

nlohmann::json to_json(const BaResult& r) {
    return {{"dist1", to_json(r.dist1)},
            {"dist2", to_json(r.dist2)},
            {"achieved_mi", r.achieved_mi},
            {"achieved_mi_bits", r.achieved_mi / std::numbers::ln2},
            {"trace", r.trace},
            {"iterations", r.iterations},
            {"converged", r.converged},
            {"monotone", r.monotone}};
}

nlohmann::json to_json(const WidebandReport& r) {
    nlohmann::json energy = nlohmann::json::array();
    for (const auto& p : r.energy_points) {
        energy.push_back({{"alpha", p.alpha}, {"theta", p.theta}, {"db", pair_json(p.db)}});
    }
    nlohmann::json gaps = nlohmann::json::array();
    for (const auto& g : r.tdma_gaps) {
        gaps.push_back({{"alpha", g.alpha}, {"db", pair_json(g.db)}});
    }
    nlohmann::json slopes = nlohmann::json::array();
    for (const auto& s : r.slope_points) {
        slopes.push_back({{"theta", s.theta},
                          {"alpha", s.alpha},
                          {"successive", pair_json(s.successive)},
                          {"tdma", pair_json(s.tdma)}});
    }
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : r.convergence_table) {
        table.push_back({{"snr", row.snr}, {"estimate", row.estimate}});
    }
    return {{"eb_n0_min_db", r.eb_n0_min_db},
            {"eb_n0_min_nats", r.eb_n0_min_nats},
            {"eb_n0_per_use_db", r.eb_n0_per_use_db},
            {"slope_s0", r.slope_s0},
            {"per_user_eb_n0_db", pair_json(r.per_user_eb_n0_db)},
            {"slope_pair", pair_json(r.slope_pair)},
            {"tdma_gap_db", pair_json(r.tdma_gap_db)},
            {"energy_points", energy},
            {"tdma_gaps", gaps},
            {"slope_points", slopes},
            {"convergence_table", table}};
}

void write_trace_csv(std::ostream& os, const BaResult& r) {
    os << "iteration,mi\n";
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
        os << k << ',' << format_double(r.trace[k]) << '\n';
    }
}

void write_region_csv(std::ostream& os, std::span<const RegionSample> samples) {
    os << "alpha,r1,r2,kind,units\n";
    for (const auto& s : samples) {
        for (const auto& p : s.pairs) {
            os << format_double(p.alpha) << ',' << format_double(p.r1) << ',' << format_double(p.r2) << ','
               << to_string(s.kind) << ',' << to_string(s.units) << '\n';
        }
    }
}

void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows) {
    os << "snr,estimate\n";
    for (const auto& r : rows) {
        os << format_double(r.snr) << ',' << format_double(r.estimate) << '\n';
    }
}

} // namespace peakcap
