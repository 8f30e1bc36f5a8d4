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
 * @file channel.hpp
 * @brief The two-user GMAC Y = X1 + X2 + Z and its information measures.
 *
 * Output densities are Gaussian mixtures with a common component width.
 * Entropies are computed per component,
 *
 *     h(Y) = -sum_j w_j E[log p(u_j + sigma Y)],   Y ~ N(0, 1),
 *
 * so each expectation sees a single well-centred Gaussian weight regardless
 * of how far apart the means are. All results are in nats.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "peakcap/distributions.hpp"
#include "peakcap/numerics.hpp"

namespace peakcap {

struct GmacModel {
    double rho1 = 1.0;
    double rho2 = 1.0;
    double sigma = 1.0;

    /// Throws DomainError unless every field is positive and finite.
    void validate() const;
};

/// p(y) = sum_j w_j N(y; mean_j, sigma^2), means strictly increasing.
class GaussianMixture {
public:
    static GaussianMixture make(std::vector<double> means, std::vector<double> weights, double sigma);

    std::span<const double> means() const noexcept { return means_; }
    std::span<const double> weights() const noexcept { return weights_; }
    double sigma() const noexcept { return sigma_; }
    std::size_t size() const noexcept { return means_.size(); }

private:
    GaussianMixture(std::vector<double> means, std::vector<double> weights, double sigma)
        : means_(std::move(means)), weights_(std::move(weights)), sigma_(sigma) {}

    std::vector<double> means_;
    std::vector<double> weights_;
    double sigma_ = 1.0;
};

/// Mixture over the support of convolve(d1, d2).
GaussianMixture output_mixture(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma);

/// Mixture over the support of d alone (the channel seen once the other user is known).
GaussianMixture single_user_mixture(const DiscreteDistribution& d, double sigma);

/// log p(y), log-sum-exp over the components that can matter at y.
double log_density(const GaussianMixture& m, double y);

/// E[log p(c + sigma Y)] for every c in `centers`.
///
/// When the means and the centres share a uniform lattice the density at
/// all quadrature nodes is a discrete correlation with a fixed kernel, which
/// is evaluated directly; other layouts fall back to log_density per node.
std::vector<double> expected_log_density(const GaussianMixture& m, std::span<const double> centers,
                                         const QuadratureSpec& spec);

/// 0.5 log(2 pi e sigma^2).
double gaussian_entropy(double sigma);

double differential_entropy(const GaussianMixture& m, const QuadratureSpec& spec);

/// I(X1, X2; Y) = h(Y) - h(Z). Values in [-1e-10, 0) clamp to 0; anything
/// lower throws NumericalError.
double mutual_information_joint(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                                const QuadratureSpec& spec);

/// I(X1; Y | X2) = h(X1 + Z) - h(Z). d2 is validated but does not enter.
double conditional_mi_user1(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                            const QuadratureSpec& spec);
double conditional_mi_user2(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                            const QuadratureSpec& spec);

/// I(X2; Y) = sum_{x2} p(x2) D(p(Y | x2) || p(Y)), user 1 treated as noise.
double mi_user2_marginal(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                         const QuadratureSpec& spec);
/// I(X1; Y) with user 2 treated as noise.
double mi_user1_marginal(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                         const QuadratureSpec& spec);

/// D(N(x1 + x2, sigma^2) || m), sigma taken from m.
double kl_point_to_output(double x1, double x2, const GaussianMixture& m, const QuadratureSpec& spec);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Sample mean of log p(y | x1, x2) - log p(y) over n draws. Draw k uses
/// SplitMix64 outputs at counters 4k..4k+3 from `seed`, so results depend on
/// (seed, n) only. Requires n >= 10^4.
MonteCarloEstimate monte_carlo_mi(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                                  std::int64_t n, std::uint64_t seed);

} // namespace peakcap
