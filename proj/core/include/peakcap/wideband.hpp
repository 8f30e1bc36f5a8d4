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

/**
 * @file wideband.hpp
 * @brief Low-SNR behaviour: energy per bit, wideband slopes and TDMA penalties.
 *
 * The capacity cost function is C(snr) = 2 [snr - E log cosh(snr - sqrt(snr) Y)],
 * the antipodal rate at 2W = 1 sample per second. Its expansion is
 * C(snr) = snr - snr^2 / 2 + O(snr^3).
 *
 * Limits at snr -> 0 are estimated on the grid 1e-1, 1e-2, ..., 1e-7 and
 * extrapolated with two Richardson levels. Slopes use one-sided O(h^2)
 * stencils at zero and the usual -2 [R'(0)]^2 / R''(0).
 */

#include <utility>
#include <vector>

#include "peakcap/numerics.hpp"

namespace peakcap {

struct ConvergenceRow {
    double snr = 0.0;
    double estimate = 0.0;
};

/// Default low-SNR grid, strictly decreasing.
std::vector<double> default_snr_grid();

double capacity_cost_fn(double snr, const QuadratureSpec& spec = {});

struct EnergyPerBit {
    /// lim snr / C(snr): energy per nat over N0.
    double nats_value = 0.0;
    /// nats_value * ln 2: energy per bit over N0.
    double bits_value = 0.0;
    double db_value = 0.0;
    /// The same limit with the per-use rate C(snr) / 2 in the denominator.
    double per_use_nats_value = 0.0;
    double per_use_db_value = 0.0;
    /// snr / C(snr) along the grid.
    std::vector<ConvergenceRow> table;
};

/// Throws NumericalError if the table fails to decrease monotonically with snr.
EnergyPerBit min_energy_per_bit(const QuadratureSpec& spec = {});

/// 2 [f'(0)]^2 / (-f''(0)). Returns 0 for a rate that is identically zero
/// to second order; throws NumericalError if f''(0) >= 0 otherwise.
double slope_from_derivatives(const Derivatives& d);

/// Default finite-difference step at snr = 0.
inline constexpr double kSlopeStep = 1e-3;

/// Wideband slope of C(snr).
double slope_s0(const QuadratureSpec& spec = {}, double h = kSlopeStep);

/// Per-user energy per bit in dB along snr_2 = snr_1 / theta for the
/// successive-decoding rates with time-sharing parameter alpha.
std::pair<double, double> gmac_min_energy(double alpha, double theta, const QuadratureSpec& spec = {});

/// TDMA energy per bit minus the single-user minimum, in dB, for each user.
/// Also checks the numeric values against 10 log10(1 / alpha) and
/// 10 log10(1 / (1 - alpha)) to 0.02 dB and throws NumericalError otherwise.
std::pair<double, double> tdma_energy_gap(double alpha, const QuadratureSpec& spec = {});

/// Per-user wideband slopes of the successive-decoding rates along
/// snr_2 = snr_1 / theta.
std::pair<double, double> slope_region_successive(double theta, double alpha = 0.5, const QuadratureSpec& spec = {},
                                                  double h = kSlopeStep);

/// Per-user wideband slopes of the naive TDMA rates.
std::pair<double, double> slope_region_tdma(double alpha, const QuadratureSpec& spec = {}, double h = kSlopeStep);

/// 0.5 (alpha + (1-alpha)/2 (1 + 1/theta + 2/sqrt(theta))^2
///          + (1-alpha)/2 (1 + 1/theta - 2/sqrt(theta))^2 - (1-alpha)/theta^2),
/// the closed-form slope denominator for the successive-decoding rates.
double successive_slope_denominator(double alpha, double theta);

struct SlopeRegionPoint {
    double theta = 1.0;
    double alpha = 0.5;
    std::pair<double, double> successive;
    std::pair<double, double> tdma;
};

struct EnergyPoint {
    double alpha = 0.5;
    double theta = 1.0;
    std::pair<double, double> db;
};

struct TdmaGapPoint {
    double alpha = 0.5;
    std::pair<double, double> db;
};

struct WidebandReport {
    double eb_n0_min_db = 0.0;
    double eb_n0_min_nats = 0.0;
    double eb_n0_per_use_db = 0.0;
    double slope_s0 = 0.0;
    /// First (alpha, theta) pair requested.
    std::pair<double, double> per_user_eb_n0_db;
    std::pair<double, double> slope_pair;
    std::pair<double, double> tdma_gap_db;
    std::vector<EnergyPoint> energy_points;
    std::vector<TdmaGapPoint> tdma_gaps;
    std::vector<SlopeRegionPoint> slope_points;
    std::vector<ConvergenceRow> convergence_table;
};

struct WidebandRequest {
    std::vector<double> alphas{0.25, 0.5, 0.75};
    std::vector<double> thetas{0.5, 1.0, 2.0};
};

WidebandReport wideband_report(const WidebandRequest& request, const QuadratureSpec& spec = {});

} // namespace peakcap
