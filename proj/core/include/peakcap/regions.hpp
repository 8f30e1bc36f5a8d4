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
 * @file regions.hpp
 * @brief Closed-form rates for antipodal inputs and the regions built from them.
 *
 * With X_i = +-sqrt(rho_i) equiprobable and unit noise variance:
 *
 *   I(X1; Y | X2)     = rho_1 - E[log cosh(rho_1 - sqrt(rho_1) Y)]
 *   S(rho_1, rho_2)   = rho_1 + rho_2 - (E[log cosh(A - a Y)] + E[log cosh(B - b Y)]) / 2
 *   corner(i | j)     = S(rho_1, rho_2) - I(X_j; Y | X_i)
 *
 * with a = sqrt(rho_1) + sqrt(rho_2), b = |sqrt(rho_1) - sqrt(rho_2)|,
 * A = a^2, B = b^2. S is the average of the single-user antipodal rates at
 * amplitudes a and b. That is I(X1 + X2; Y | sign(X1 X2)), a lower bound on
 * I(X1, X2; Y).
 *
 * Per-use values are in nats. Region samples carry the factor two of 2W = 2
 * samples per second explicitly through RateUnits.
 */

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "peakcap/numerics.hpp"

namespace peakcap {

/// Largest sqrt(rho) for which the closed forms are claimed capacity-tight.
inline constexpr double kSmallPeakAmplitude = 1.05;

enum class DomainMode {
    strict,    ///< sqrt(rho) > 1.05 throws DomainError
    permissive ///< sqrt(rho) > 1.05 emits a warning and proceeds
};

double rate_antipodal(double rho, DomainMode mode = DomainMode::strict, const QuadratureSpec& spec = {});

double sum_rate_antipodal(double rho1, double rho2, DomainMode mode = DomainMode::strict,
                          const QuadratureSpec& spec = {});

/// I(X_self; Y) with the other user's antipodal signal treated as noise.
double corner_mi(double rho_self, double rho_other, DomainMode mode = DomainMode::strict,
                 const QuadratureSpec& spec = {});

struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;
    double alpha = 0.0;
};

enum class RegionKind { successive, tdma, gaussian_baseline };
enum class RateUnits { nats_per_use, nats_per_sec_2w1 };

std::string_view to_string(RegionKind kind);
std::string_view to_string(RateUnits units);

struct RegionSample {
    std::vector<RatePair> pairs;
    RegionKind kind = RegionKind::successive;
    RateUnits units = RateUnits::nats_per_sec_2w1;
};

/// `n` equispaced points on [0, 1] inclusive (n >= 2), or {0.5} for n == 1.
std::vector<double> alpha_grid(int n);

/// Time sharing of the two decoding orders at fixed antipodal inputs:
/// R1 = 2[alpha I(X1;Y|X2) + (1 - alpha) I(X1;Y)],
/// R2 = 2[alpha I(X2;Y) + (1 - alpha) I(X2;Y|X1)].
RegionSample successive_region(double snr1, double snr2, std::span<const double> alphas,
                               DomainMode mode = DomainMode::strict, const QuadratureSpec& spec = {});

/// Naive TDMA: (2 alpha r(snr1), 2 (1 - alpha) r(snr2)).
RegionSample tdma_region(double snr1, double snr2, std::span<const double> alphas,
                         DomainMode mode = DomainMode::strict, const QuadratureSpec& spec = {});

/// Gaussian-input MAC pentagon under average power snr_i, traced between its
/// corners with the same alpha convention and units.
RegionSample gaussian_baseline_region(double snr1, double snr2, std::span<const double> alphas);

/// 0.5 log(1 + snr1 + snr2).
double gaussian_sum_rate(double snr1, double snr2);

/// (W, 2 W r(P / (N0 W))) for every W in the grid.
std::vector<std::pair<double, double>> infinite_bw_rate(double power, double n0, std::span<const double> bandwidths,
                                                        const QuadratureSpec& spec = {});

/// (W, 2 W S(P1 / (N0 W), P2 / (N0 W))) for every W in the grid.
std::vector<std::pair<double, double>> infinite_bw_sum_rate(double p1, double p2, double n0,
                                                            std::span<const double> bandwidths,
                                                            const QuadratureSpec& spec = {});

/// (P1 + P2) / (alpha P1 + (1 - alpha) P2) for alpha in (0, 1).
double succ_tdma_ratio(double p1, double p2, double alpha);

} // namespace peakcap
