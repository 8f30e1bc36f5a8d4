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

#include <cstddef>
#include <span>
#include <vector>

namespace peakcap {

/// Absolute tolerance under which two mass points are the same point.
inline constexpr double kPointMergeTolerance = 1e-12;

/// Finite input law on [-peak_bound, peak_bound]: strictly increasing mass
/// points with probabilities summing to one. Immutable once built.
class DiscreteDistribution {
public:
    /// Sorts, merges points closer than kPointMergeTolerance, and
    /// renormalizes when the total lies within 1e-9 of one. Throws
    /// DomainError otherwise, on negative or non-finite probabilities, and on
    /// points outside the peak bound.
    static DiscreteDistribution make(std::vector<double> points, std::vector<double> probs, double peak_bound);

    std::span<const double> points() const noexcept { return points_; }
    std::span<const double> probs() const noexcept { return probs_; }
    double peak_bound() const noexcept { return peak_bound_; }
    std::size_t size() const noexcept { return points_.size(); }

    double mean() const noexcept;
    double variance() const noexcept;
    double max_prob() const noexcept;

private:
    DiscreteDistribution(std::vector<double> points, std::vector<double> probs, double peak_bound)
        : points_(std::move(points)), probs_(std::move(probs)), peak_bound_(peak_bound) {}

    std::vector<double> points_;
    std::vector<double> probs_;
    double peak_bound_ = 0.0;
};

inline DiscreteDistribution make_distribution(std::vector<double> points, std::vector<double> probs,
                                              double peak_bound) {
    return DiscreteDistribution::make(std::move(points), std::move(probs), peak_bound);
}

/// Equiprobable +-sqrt(rho).
DiscreteDistribution antipodal(double rho);

/// K equispaced points on [-sqrt(rho), sqrt(rho)], each with mass 1/K.
DiscreteDistribution uniform_grid(int k, double rho);

/// Single mass point at zero.
DiscreteDistribution degenerate();

/// Law of X1 + X2 for independent inputs; coincident sums are merged.
DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b);

/// Drops points with probability below `floor` and renormalizes.
DiscreteDistribution prune(const DiscreteDistribution& d, double floor);

} // namespace peakcap
