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
 * @file ba.hpp
 * @brief Alternating Blahut-Arimoto maximization of I(X1, X2; Y).
 *
 * Mass-point locations are fixed on equispaced grids over [-sqrt(rho_i),
 * sqrt(rho_i)]; only the probabilities move. One iteration is
 *
 *   1. p1(x1) <- p1(x1) exp(I1(x1)),  I1(x1) = sum_{x2} p2(x2) D(N(x1+x2, s^2) || p(Y))
 *   2. p2(x2) <- p2(x2) exp(D(p(Y | x2) || p(Y)))   with the fresh p1
 *
 * followed by normalization and recording I(X1, X2; Y). Both steps reduce to
 * g(u) = E[log p(u + sigma Z)] at the distinct sums u = x1 + x2, so an
 * iteration costs two batched evaluations of g.
 */

#include <cstdint>
#include <vector>

#include "peakcap/distributions.hpp"
#include "peakcap/numerics.hpp"

namespace peakcap {

/// Masses are never allowed below this value inside the updates.
inline constexpr double kProbabilityFloor = 1e-300;

enum class BaInit {
    random,   ///< i.i.d. uniform draws from `seed`, normalized
    uniform,  ///< 1/K everywhere
    antipodal ///< 0.5 - 5e-4 at each endpoint, 1e-3 spread over the interior
};

struct BaConfig {
    int k1 = 51;
    int k2 = 51;
    double rho1 = 1.0;
    double rho2 = 1.0;
    double sigma = 1.0;
    double epsilon = 1e-9;
    int max_iters = 10000;
    std::uint64_t seed = 42;
    BaInit init = BaInit::random;

    /// Throws DomainError naming the offending field.
    void validate() const;
};

struct BaResult {
    DiscreteDistribution dist1;
    DiscreteDistribution dist2;
    double achieved_mi = 0.0;
    /// I at the initial point followed by one entry per iteration.
    std::vector<double> trace;
    int iterations = 0;
    bool converged = false;
    /// False when some iteration decreased I by more than 1e-10.
    bool monotone = true;
};

/// One user-1 step for fixed d2. Input masses are floored first.
DiscreteDistribution ba_update_user1(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                                     const QuadratureSpec& spec);

/// One user-2 step for fixed d1.
DiscreteDistribution ba_update_user2(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                                     const QuadratureSpec& spec);

/// Initial law on the K-point grid for `init`.
DiscreteDistribution ba_initial_distribution(int k, double rho, BaInit init, std::uint64_t seed);

/// Runs from explicit starting laws. Every iteration updates user 1, then
/// user 2, then records I. Stops when successive values differ by less than
/// `epsilon` or after `max_iters` iterations.
BaResult run_ba_from(const DiscreteDistribution& init1, const DiscreteDistribution& init2, double sigma,
                     double epsilon, int max_iters, const QuadratureSpec& spec);

/// Builds the grids and starting laws from `config`, then runs run_ba_from.
/// User 2 draws its random start from seed + 1.
BaResult run_ba(const BaConfig& config, const QuadratureSpec& spec = {});

} // namespace peakcap
