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

#include "peakcap/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "peakcap/errors.hpp"

namespace peakcap {

DiscreteDistribution DiscreteDistribution::make(std::vector<double> points, std::vector<double> probs,
                                                double peak_bound) {
    if (points.size() != probs.size()) {
        throw DomainError("make_distribution: points and probs differ in length");
    }
    if (points.empty()) {
        throw DomainError("make_distribution: at least one mass point is required");
    }
    if (!(peak_bound >= 0.0) || !std::isfinite(peak_bound)) {
        throw DomainError("make_distribution: peak_bound must be finite and >= 0");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i])) {
            throw DomainError("make_distribution: non-finite mass point");
        }
        if (!std::isfinite(probs[i]) || probs[i] < 0.0) {
            std::ostringstream os;
            os << "make_distribution: probability " << probs[i] << " at index " << i << " is invalid";
            throw DomainError(os.str());
        }
        if (std::fabs(points[i]) > peak_bound + kPointMergeTolerance) {
            std::ostringstream os;
            os << "make_distribution: point " << points[i] << " exceeds peak bound " << peak_bound;
            throw DomainError(os.str());
        }
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::fabs(total - 1.0) > 1e-9) {
        std::ostringstream os;
        os.precision(17);
        os << "make_distribution: probabilities sum to " << total << ", not 1";
        throw DomainError(os.str());
    }

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

    std::vector<double> pts;
    std::vector<double> prs;
    pts.reserve(points.size());
    prs.reserve(points.size());
    for (std::size_t idx : order) {
        if (!pts.empty() && points[idx] - pts.back() <= kPointMergeTolerance) {
            prs.back() += probs[idx];
        } else {
            pts.push_back(points[idx]);
            prs.push_back(probs[idx]);
        }
    }
    const double merged_total = std::accumulate(prs.begin(), prs.end(), 0.0);
    for (double& p : prs) {
        p /= merged_total;
    }
    for (double& x : pts) {
        x = std::clamp(x, -peak_bound, peak_bound);
    }
    return DiscreteDistribution(std::move(pts), std::move(prs), peak_bound);
}

double DiscreteDistribution::mean() const noexcept {
    double m = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        m += probs_[i] * points_[i];
    }
    return m;
}

double DiscreteDistribution::variance() const noexcept {
    const double m = mean();
    double v = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const double d = points_[i] - m;
        v += probs_[i] * d * d;
    }
    return v;
}

double DiscreteDistribution::max_prob() const noexcept {
    return *std::max_element(probs_.begin(), probs_.end());
}

DiscreteDistribution antipodal(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw DomainError("antipodal: rho must be positive and finite");
    }
    const double a = std::sqrt(rho);
    return DiscreteDistribution::make({-a, a}, {0.5, 0.5}, a);
}

DiscreteDistribution uniform_grid(int k, double rho) {
    if (k < 2) {
        throw DomainError("uniform_grid: K must be >= 2");
    }
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw DomainError("uniform_grid: rho must be positive and finite");
    }
    const double a = std::sqrt(rho);
    std::vector<double> pts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        // Symmetric construction keeps the grid exactly closed under negation.
        const double t = static_cast<double>(2 * i - (k - 1)) / static_cast<double>(k - 1);
        pts[static_cast<std::size_t>(i)] = a * t;
    }
    std::vector<double> prs(static_cast<std::size_t>(k), 1.0 / k);
    return DiscreteDistribution::make(std::move(pts), std::move(prs), a);
}

DiscreteDistribution degenerate() {
    return DiscreteDistribution::make({0.0}, {1.0}, 0.0);
}

DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b) {
    std::vector<double> pts;
    std::vector<double> prs;
    pts.reserve(a.size() * b.size());
    prs.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            pts.push_back(a.points()[i] + b.points()[j]);
            prs.push_back(a.probs()[i] * b.probs()[j]);
        }
    }
    return DiscreteDistribution::make(std::move(pts), std::move(prs), a.peak_bound() + b.peak_bound());
}

DiscreteDistribution prune(const DiscreteDistribution& d, double floor) {
    if (!(floor >= 0.0) || !(floor < 1.0)) {
        throw DomainError("prune: floor must lie in [0, 1)");
    }
    std::vector<double> pts;
    std::vector<double> prs;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.probs()[i] >= floor) {
            pts.push_back(d.points()[i]);
            prs.push_back(d.probs()[i]);
        }
    }
    if (pts.empty()) {
        throw DomainError("prune: every mass point falls below the floor");
    }
    if (pts.size() == d.size()) {
        return d;
    }
    const double kept = std::accumulate(prs.begin(), prs.end(), 0.0);
    for (double& p : prs) {
        p /= kept;
    }
    return DiscreteDistribution::make(std::move(pts), std::move(prs), d.peak_bound());
}

} // namespace peakcap
