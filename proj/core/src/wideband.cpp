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

#include "peakcap/wideband.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "peakcap/errors.hpp"
#include "peakcap/regions.hpp"

namespace peakcap {
namespace {

constexpr double kGridRatio = 10.0;
constexpr int kRichardsonLevels = 2;

double antipodal_rate(double snr, const QuadratureSpec& spec) {
    return snr == 0.0 ? 0.0 : rate_antipodal(snr, DomainMode::strict, spec);
}

double corner(double self, double other, const QuadratureSpec& spec) {
    if (self == 0.0) {
        return 0.0;
    }
    if (other == 0.0) {
        return antipodal_rate(self, spec);
    }
    return corner_mi(self, other, DomainMode::strict, spec);
}

// Successive-decoding rates at (snr1, snr2), 2W = 2 units.
std::pair<double, double> successive_rates(double alpha, double snr1, double snr2, const QuadratureSpec& spec) {
    const double i1 = antipodal_rate(snr1, spec);
    const double i2 = antipodal_rate(snr2, spec);
    const double c1 = corner(snr1, snr2, spec);
    const double c2 = corner(snr2, snr1, spec);
    return {2.0 * (alpha * i1 + (1.0 - alpha) * c1), 2.0 * (alpha * c2 + (1.0 - alpha) * i2)};
}

// lim_{s -> 0} s / rate(s) on a geometric grid starting at `top`.
double energy_limit(const std::function<double(double)>& rate, double top, const char* where) {
    std::vector<double> values;
    double finest = 0.0;
    double s = top;
    for (int k = 0; k < 7; ++k, s /= kGridRatio) {
        const double r = rate(s);
        if (!(r > 0.0) || !std::isfinite(r)) {
            std::ostringstream os;
            os << where << ": rate " << r << " at snr " << s << " is not positive";
            throw NumericalError(os.str());
        }
        values.push_back(s / r);
        finest = values.back();
    }
    const double limit = richardson_limit(values, kGridRatio, kRichardsonLevels);
    if (!std::isfinite(limit) || std::fabs(limit - finest) > 1e-3 * std::fabs(limit)) {
        std::ostringstream os;
        os << where << ": extrapolation did not settle (limit " << limit << ", finest sample " << finest << ")";
        throw NumericalError(os.str());
    }
    return limit;
}

double nats_to_db(double energy_per_nat) {
    return to_db(energy_per_nat * std::numbers::ln2);
}

void check_theta(double theta, const char* where) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        std::ostringstream os;
        os << where << ": theta must be positive and finite";
        throw DomainError(os.str());
    }
}

void check_alpha_closed(double alpha, const char* where) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::ostringstream os;
        os << where << ": alpha must lie in [0, 1]";
        throw DomainError(os.str());
    }
}

} // namespace

std::vector<double> default_snr_grid() {
    std::vector<double> g;
    double s = 1e-1;
    for (int k = 0; k < 7; ++k, s /= kGridRatio) {
        g.push_back(s);
    }
    return g;
}

double capacity_cost_fn(double snr, const QuadratureSpec& spec) {
    if (!(snr >= 0.0) || !std::isfinite(snr)) {
        throw DomainError("capacity_cost_fn: snr must be finite and >= 0");
    }
    if (snr == 0.0) {
        return 0.0;
    }
    return 2.0 * (snr - expected_log_cosh_affine(snr, std::sqrt(snr), spec));
}

EnergyPerBit min_energy_per_bit(const QuadratureSpec& spec) {
    EnergyPerBit out;
    std::vector<double> values;
    for (double s : default_snr_grid()) {
        const double est = s / capacity_cost_fn(s, spec);
        if (!out.table.empty() && !(est < out.table.back().estimate)) {
            std::ostringstream os;
            os.precision(17);
            os << "min_energy_per_bit: convergence table not monotone at snr " << s << " (" << est
               << " after " << out.table.back().estimate << ")";
            throw NumericalError(os.str());
        }
        out.table.push_back({s, est});
        values.push_back(est);
    }
    out.nats_value = richardson_limit(values, kGridRatio, kRichardsonLevels);
    out.bits_value = out.nats_value * std::numbers::ln2;
    out.db_value = to_db(out.bits_value);
    out.per_use_nats_value = 2.0 * out.nats_value;
    out.per_use_db_value = nats_to_db(out.per_use_nats_value);
    return out;
}

double slope_from_derivatives(const Derivatives& d) {
    if (std::fabs(d.first) < 1e-12 && std::fabs(d.second) < 1e-9) {
        return 0.0;
    }
    if (!(d.second < 0.0)) {
        std::ostringstream os;
        os << "wideband slope: second derivative " << d.second << " is not negative";
        throw NumericalError(os.str());
    }
    return 2.0 * d.first * d.first / (-d.second);
}

double slope_s0(const QuadratureSpec& spec, double h) {
    const Derivatives d =
        central_derivatives([&](double s) { return capacity_cost_fn(s, spec); }, 0.0, h, Stencil::forward);
    return slope_from_derivatives(d);
}

std::pair<double, double> gmac_min_energy(double alpha, double theta, const QuadratureSpec& spec) {
    check_alpha_closed(alpha, "gmac_min_energy");
    check_theta(theta, "gmac_min_energy");
    // Keep both users' SNR at or below 0.1 on the grid.
    const double top1 = 0.1 * std::min(1.0, theta);
    const double e1 = energy_limit(
        [&](double s1) { return successive_rates(alpha, s1, s1 / theta, spec).first; }, top1,
        "gmac_min_energy (user 1)");
    const double e2 = energy_limit(
        [&](double s1) { return successive_rates(alpha, s1, s1 / theta, spec).second * theta; }, top1,
        "gmac_min_energy (user 2)");
    return {nats_to_db(e1), nats_to_db(e2)};
}

std::pair<double, double> tdma_energy_gap(double alpha, const QuadratureSpec& spec) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("tdma_energy_gap: alpha must lie in (0, 1)");
    }
    const double floor_db = min_energy_per_bit(spec).db_value;
    const double e1 = energy_limit([&](double s) { return 2.0 * alpha * antipodal_rate(s, spec); }, 0.1,
                                   "tdma_energy_gap (user 1)");
    const double e2 = energy_limit([&](double s) { return 2.0 * (1.0 - alpha) * antipodal_rate(s, spec); }, 0.1,
                                   "tdma_energy_gap (user 2)");
    const std::pair<double, double> gap{nats_to_db(e1) - floor_db, nats_to_db(e2) - floor_db};
    const double closed1 = to_db(1.0 / alpha);
    const double closed2 = to_db(1.0 / (1.0 - alpha));
    if (std::fabs(gap.first - closed1) > 0.02 || std::fabs(gap.second - closed2) > 0.02) {
        std::ostringstream os;
        os << "tdma_energy_gap: numeric gaps (" << gap.first << ", " << gap.second << ") dB disagree with ("
           << closed1 << ", " << closed2 << ") dB";
        throw NumericalError(os.str());
    }
    return gap;
}

std::pair<double, double> slope_region_successive(double theta, double alpha, const QuadratureSpec& spec, double h) {
    check_theta(theta, "slope_region_successive");
    check_alpha_closed(alpha, "slope_region_successive");
    // User i is differentiated in its own SNR, the other following the ratio theta.
    const Derivatives d1 = central_derivatives(
        [&](double s1) { return successive_rates(alpha, s1, s1 / theta, spec).first; }, 0.0, h, Stencil::forward);
    const Derivatives d2 = central_derivatives(
        [&](double s2) { return successive_rates(alpha, s2 * theta, s2, spec).second; }, 0.0, h, Stencil::forward);
    return {slope_from_derivatives(d1), slope_from_derivatives(d2)};
}

std::pair<double, double> slope_region_tdma(double alpha, const QuadratureSpec& spec, double h) {
    check_alpha_closed(alpha, "slope_region_tdma");
    const Derivatives d1 = central_derivatives(
        [&](double s) { return 2.0 * alpha * antipodal_rate(s, spec); }, 0.0, h, Stencil::forward);
    const Derivatives d2 = central_derivatives(
        [&](double s) { return 2.0 * (1.0 - alpha) * antipodal_rate(s, spec); }, 0.0, h, Stencil::forward);
    return {slope_from_derivatives(d1), slope_from_derivatives(d2)};
}

double successive_slope_denominator(double alpha, double theta) {
    check_alpha_closed(alpha, "successive_slope_denominator");
    check_theta(theta, "successive_slope_denominator");
    const double u = 1.0 + 1.0 / theta;
    const double v = 2.0 / std::sqrt(theta);
    const double rest = 1.0 - alpha;
    return 0.5 * (alpha + 0.5 * rest * (u + v) * (u + v) + 0.5 * rest * (u - v) * (u - v) - rest / (theta * theta));
}

WidebandReport wideband_report(const WidebandRequest& request, const QuadratureSpec& spec) {
    if (request.alphas.empty() || request.thetas.empty()) {
        throw DomainError("wideband_report: alpha and theta lists must be non-empty");
    }
    WidebandReport r;
    const EnergyPerBit e = min_energy_per_bit(spec);
    r.eb_n0_min_db = e.db_value;
    r.eb_n0_min_nats = e.nats_value;
    r.eb_n0_per_use_db = e.per_use_db_value;
    r.convergence_table = e.table;
    r.slope_s0 = slope_s0(spec);
    for (double a : request.alphas) {
        for (double t : request.thetas) {
            r.energy_points.push_back({a, t, gmac_min_energy(a, t, spec)});
            r.slope_points.push_back({t, a, slope_region_successive(t, a, spec), slope_region_tdma(a, spec)});
        }
        if (a > 0.0 && a < 1.0) {
            r.tdma_gaps.push_back({a, tdma_energy_gap(a, spec)});
        }
    }
    r.per_user_eb_n0_db = r.energy_points.front().db;
    r.slope_pair = r.slope_points.front().successive;
    if (!r.tdma_gaps.empty()) {
        r.tdma_gap_db = r.tdma_gaps.front().db;
    }
    return r;
}

} // namespace peakcap
