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

#include "peakcap/regions.hpp"

#include <cmath>
#include <sstream>

#include "peakcap/diagnostics.hpp"
#include "peakcap/errors.hpp"

namespace peakcap {
namespace {

void check_rho(double rho, DomainMode mode, const char* where) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        std::ostringstream os;
        os << where << ": rho must be positive and finite, got " << rho;
        throw DomainError(os.str());
    }
    if (std::sqrt(rho) > kSmallPeakAmplitude) {
        std::ostringstream os;
        os << where << ": sqrt(rho) = " << std::sqrt(rho) << " exceeds the small-peak bound "
           << kSmallPeakAmplitude;
        if (mode == DomainMode::strict) {
            throw DomainError(os.str());
        }
        warn(os.str() + "; value is an antipodal-input achievable rate only");
    }
}

// rho - E[log cosh(rho - sqrt(rho) Y)], no domain checks.
double antipodal_unchecked(double rho, const QuadratureSpec& spec) {
    if (rho == 0.0) {
        return 0.0;
    }
    return rho - expected_log_cosh_affine(rho, std::sqrt(rho), spec);
}

double sum_unchecked(double rho1, double rho2, const QuadratureSpec& spec) {
    const double s1 = std::sqrt(rho1);
    const double s2 = std::sqrt(rho2);
    const double a = s1 + s2;
    const double b = std::fabs(s1 - s2);
    return rho1 + rho2 -
           0.5 * (expected_log_cosh_affine(a * a, a, spec) + expected_log_cosh_affine(b * b, b, spec));
}

void check_alphas(std::span<const double> alphas, const char* where) {
    for (double a : alphas) {
        if (!(a >= 0.0 && a <= 1.0)) {
            std::ostringstream os;
            os << where << ": alpha " << a << " outside [0, 1]";
            throw DomainError(os.str());
        }
    }
}

} // namespace

double rate_antipodal(double rho, DomainMode mode, const QuadratureSpec& spec) {
    check_rho(rho, mode, "rate_antipodal");
    return antipodal_unchecked(rho, spec);
}

double sum_rate_antipodal(double rho1, double rho2, DomainMode mode, const QuadratureSpec& spec) {
    check_rho(rho1, mode, "sum_rate_antipodal");
    check_rho(rho2, mode, "sum_rate_antipodal");
    return sum_unchecked(rho1, rho2, spec);
}

double corner_mi(double rho_self, double rho_other, DomainMode mode, const QuadratureSpec& spec) {
    check_rho(rho_self, mode, "corner_mi");
    check_rho(rho_other, mode, "corner_mi");
    const double s1 = std::sqrt(rho_self);
    const double s2 = std::sqrt(rho_other);
    const double a = s1 + s2;
    const double b = std::fabs(s1 - s2);
    const double so = std::sqrt(rho_other);
    // One integrand: log[cosh(A - aY) cosh(B - bY) / cosh^2(rho_o - sqrt(rho_o) Y)].
    const double e = gaussian_expectation(
        [&](double y) {
            return log_cosh(a * a - a * y) + log_cosh(b * b - b * y) - 2.0 * log_cosh(rho_other - so * y);
        },
        scaled_for_log_cosh(spec, a));
    return rho_self - 0.5 * e;
}

std::string_view to_string(RegionKind kind) {
    switch (kind) {
    case RegionKind::successive:
        return "successive";
    case RegionKind::tdma:
        return "tdma";
    case RegionKind::gaussian_baseline:
        return "gaussian_baseline";
    }
    return "unknown";
}

std::string_view to_string(RateUnits units) {
    switch (units) {
    case RateUnits::nats_per_use:
        return "nats_per_use";
    case RateUnits::nats_per_sec_2w1:
        return "nats_per_sec_2w1";
    }
    return "unknown";
}

std::vector<double> alpha_grid(int n) {
    if (n < 1) {
        throw DomainError("alpha_grid: need at least one point");
    }
    if (n == 1) {
        return {0.5};
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
    }
    return out;
}

RegionSample successive_region(double snr1, double snr2, std::span<const double> alphas, DomainMode mode,
                               const QuadratureSpec& spec) {
    check_alphas(alphas, "successive_region");
    const double i1 = rate_antipodal(snr1, mode, spec);
    const double i2 = rate_antipodal(snr2, mode, spec);
    const double c1 = corner_mi(snr1, snr2, mode, spec);
    const double c2 = corner_mi(snr2, snr1, mode, spec);
    RegionSample out{{}, RegionKind::successive, RateUnits::nats_per_sec_2w1};
    out.pairs.reserve(alphas.size());
    for (double a : alphas) {
        out.pairs.push_back({2.0 * (a * i1 + (1.0 - a) * c1), 2.0 * (a * c2 + (1.0 - a) * i2), a});
    }
    return out;
}

RegionSample tdma_region(double snr1, double snr2, std::span<const double> alphas, DomainMode mode,
                         const QuadratureSpec& spec) {
    check_alphas(alphas, "tdma_region");
    const double i1 = rate_antipodal(snr1, mode, spec);
    const double i2 = rate_antipodal(snr2, mode, spec);
    RegionSample out{{}, RegionKind::tdma, RateUnits::nats_per_sec_2w1};
    out.pairs.reserve(alphas.size());
    for (double a : alphas) {
        out.pairs.push_back({2.0 * a * i1, 2.0 * (1.0 - a) * i2, a});
    }
    return out;
}

double gaussian_sum_rate(double snr1, double snr2) {
    if (!(snr1 >= 0.0) || !(snr2 >= 0.0)) {
        throw DomainError("gaussian_sum_rate: SNRs must be >= 0");
    }
    return 0.5 * std::log1p(snr1 + snr2);
}

RegionSample gaussian_baseline_region(double snr1, double snr2, std::span<const double> alphas) {
    check_alphas(alphas, "gaussian_baseline_region");
    const double c1 = 0.5 * std::log1p(snr1);
    const double c2 = 0.5 * std::log1p(snr2);
    const double cs = gaussian_sum_rate(snr1, snr2);
    RegionSample out{{}, RegionKind::gaussian_baseline, RateUnits::nats_per_sec_2w1};
    out.pairs.reserve(alphas.size());
    for (double a : alphas) {
        out.pairs.push_back({2.0 * (a * c1 + (1.0 - a) * (cs - c2)), 2.0 * (a * (cs - c1) + (1.0 - a) * c2), a});
    }
    return out;
}

std::vector<std::pair<double, double>> infinite_bw_rate(double power, double n0, std::span<const double> bandwidths,
                                                        const QuadratureSpec& spec) {
    if (!(power > 0.0) || !(n0 > 0.0)) {
        throw DomainError("infinite_bw_rate: P and N0 must be positive");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(bandwidths.size());
    for (double w : bandwidths) {
        if (!(w > 0.0)) {
            throw DomainError("infinite_bw_rate: bandwidths must be positive");
        }
        out.emplace_back(w, 2.0 * w * antipodal_unchecked(power / (n0 * w), spec));
    }
    return out;
}

std::vector<std::pair<double, double>> infinite_bw_sum_rate(double p1, double p2, double n0,
                                                            std::span<const double> bandwidths,
                                                            const QuadratureSpec& spec) {
    if (!(p1 > 0.0) || !(p2 > 0.0) || !(n0 > 0.0)) {
        throw DomainError("infinite_bw_sum_rate: powers and N0 must be positive");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(bandwidths.size());
    for (double w : bandwidths) {
        if (!(w > 0.0)) {
            throw DomainError("infinite_bw_sum_rate: bandwidths must be positive");
        }
        out.emplace_back(w, 2.0 * w * sum_unchecked(p1 / (n0 * w), p2 / (n0 * w), spec));
    }
    return out;
}

double succ_tdma_ratio(double p1, double p2, double alpha) {
    if (!(p1 > 0.0) || !(p2 > 0.0)) {
        throw DomainError("succ_tdma_ratio: powers must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("succ_tdma_ratio: alpha must lie in (0, 1)");
    }
    return (p1 + p2) / (alpha * p1 + (1.0 - alpha) * p2);
}

} // namespace peakcap
