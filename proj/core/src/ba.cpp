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

#include "peakcap/ba.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>
#include <sstream>

#include "peakcap/channel.hpp"
#include "peakcap/diagnostics.hpp"
#include "peakcap/errors.hpp"
#include "splitmix.hpp"

namespace peakcap {

void BaConfig::validate() const {
    auto fail = [](const char* field, const char* why) {
        std::ostringstream os;
        os << "BaConfig: " << field << ' ' << why;
        throw DomainError(os.str());
    };
    if (k1 < 2) fail("k1", "must be >= 2");
    if (k2 < 2) fail("k2", "must be >= 2");
    if (!(rho1 > 0.0) || !std::isfinite(rho1)) fail("rho1", "must be positive and finite");
    if (!(rho2 > 0.0) || !std::isfinite(rho2)) fail("rho2", "must be positive and finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) fail("sigma", "must be positive and finite");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) fail("epsilon", "must be positive and finite");
    if (max_iters < 1) fail("max_iters", "must be >= 1");
}

namespace {

// Fixed grids, the map from grid pairs to distinct sums, and g at those sums.
class Workspace {
public:
    Workspace(std::span<const double> x1, std::span<const double> x2, double sigma, const QuadratureSpec& spec)
        : k1_(x1.size()), k2_(x2.size()), sigma_(sigma), spec_(spec), h_noise_(gaussian_entropy(sigma)) {
        spec.validate();
        std::vector<std::pair<double, std::size_t>> pairs;
        pairs.reserve(k1_ * k2_);
        for (std::size_t i = 0; i < k1_; ++i) {
            for (std::size_t j = 0; j < k2_; ++j) {
                pairs.emplace_back(x1[i] + x2[j], i * k2_ + j);
            }
        }
        std::stable_sort(pairs.begin(), pairs.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        pair_sum_.resize(pairs.size());
        for (const auto& [u, idx] : pairs) {
            if (sums_.empty() || u - sums_.back() > kPointMergeTolerance) {
                sums_.push_back(u);
            }
            pair_sum_[idx] = sums_.size() - 1;
        }
        weights_.resize(sums_.size());
    }

    // Recomputes g for the output law induced by (p1, p2); returns I(X1, X2; Y).
    double refresh(const std::vector<double>& p1, const std::vector<double>& p2) {
        std::fill(weights_.begin(), weights_.end(), 0.0);
        for (std::size_t i = 0; i < k1_; ++i) {
            for (std::size_t j = 0; j < k2_; ++j) {
                weights_[pair_sum_[i * k2_ + j]] += p1[i] * p2[j];
            }
        }
        const GaussianMixture m = GaussianMixture::make(sums_, weights_, sigma_);
        g_ = expected_log_density(m, sums_, spec_);
        double h = 0.0;
        for (std::size_t s = 0; s < sums_.size(); ++s) {
            if (m.weights()[s] > 0.0) {
                h -= m.weights()[s] * g_[s];
            }
        }
        return h - h_noise_;
    }

    // I1(x1_i) = sum_j p2_j D(N(x1_i + x2_j, s^2) || p(Y)).
    std::vector<double> user1_scores(const std::vector<double>& p2) const {
        std::vector<double> out(k1_, 0.0);
        for (std::size_t i = 0; i < k1_; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < k2_; ++j) {
                acc += p2[j] * g_[pair_sum_[i * k2_ + j]];
            }
            out[i] = -h_noise_ - acc;
        }
        return out;
    }

    // D(p(Y | x2_j) || p(Y)) up to the j-independent term -h(X1 + Z) + h(Z).
    std::vector<double> user2_scores(const std::vector<double>& p1) const {
        std::vector<double> out(k2_, 0.0);
        for (std::size_t i = 0; i < k1_; ++i) {
            for (std::size_t j = 0; j < k2_; ++j) {
                out[j] -= p1[i] * g_[pair_sum_[i * k2_ + j]];
            }
        }
        return out;
    }

private:
    std::size_t k1_;
    std::size_t k2_;
    double sigma_;
    QuadratureSpec spec_;
    double h_noise_;
    std::vector<double> sums_;
    std::vector<std::size_t> pair_sum_;
    std::vector<double> weights_;
    std::vector<double> g_;
};

std::vector<double> floored(std::span<const double> p) {
    std::vector<double> out(p.begin(), p.end());
    for (double& v : out) {
        v = std::max(v, kProbabilityFloor);
    }
    const double total = std::accumulate(out.begin(), out.end(), 0.0);
    for (double& v : out) {
        v /= total;
    }
    return out;
}

// p <- p exp(score), normalized in the log domain, then floored.
void multiplicative_step(std::vector<double>& p, const std::vector<double>& score) {
    std::vector<double> lp(p.size());
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
        lp[i] = std::log(p[i]) + score[i];
        if (!std::isfinite(lp[i])) {
            std::ostringstream os;
            os << "BA update: non-finite exponent at mass point " << i;
            throw NumericalError(os.str());
        }
        top = std::max(top, lp[i]);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::exp(lp[i] - top);
        total += p[i];
    }
    for (double& v : p) {
        v = std::max(v / total, kProbabilityFloor);
    }
}

DiscreteDistribution rebuild(const DiscreteDistribution& like, std::vector<double> probs) {
    return make_distribution({like.points().begin(), like.points().end()}, std::move(probs), like.peak_bound());
}

} // namespace

DiscreteDistribution ba_update_user1(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                                     const QuadratureSpec& spec) {
    Workspace ws(d1.points(), d2.points(), sigma, spec);
    std::vector<double> p1 = floored(d1.probs());
    const std::vector<double> p2 = floored(d2.probs());
    ws.refresh(p1, p2);
    multiplicative_step(p1, ws.user1_scores(p2));
    return rebuild(d1, std::move(p1));
}

DiscreteDistribution ba_update_user2(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                                     const QuadratureSpec& spec) {
    Workspace ws(d1.points(), d2.points(), sigma, spec);
    const std::vector<double> p1 = floored(d1.probs());
    std::vector<double> p2 = floored(d2.probs());
    ws.refresh(p1, p2);
    multiplicative_step(p2, ws.user2_scores(p1));
    return rebuild(d2, std::move(p2));
}

DiscreteDistribution ba_initial_distribution(int k, double rho, BaInit init, std::uint64_t seed) {
    DiscreteDistribution grid = uniform_grid(k, rho);
    const auto n = static_cast<std::size_t>(k);
    std::vector<double> probs(n, 1.0 / k);
    switch (init) {
    case BaInit::uniform:
        break;
    case BaInit::random: {
        const std::uint64_t base = detail::splitmix64(seed);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            probs[i] = detail::to_unit(detail::splitmix64(base + i));
            total += probs[i];
        }
        for (double& p : probs) {
            p /= total;
        }
        break;
    }
    case BaInit::antipodal: {
        // Multiplicative updates cannot revive a zero mass, so the interior
        // keeps a small share.
        constexpr double interior = 1e-3;
        if (n == 2) {
            probs = {0.5, 0.5};
        } else {
            std::fill(probs.begin(), probs.end(), interior / static_cast<double>(n - 2));
            probs.front() = 0.5 * (1.0 - interior);
            probs.back() = 0.5 * (1.0 - interior);
        }
        break;
    }
    }
    return rebuild(grid, std::move(probs));
}

BaResult run_ba_from(const DiscreteDistribution& init1, const DiscreteDistribution& init2, double sigma,
                     double epsilon, int max_iters, const QuadratureSpec& spec) {
    if (!(epsilon > 0.0)) {
        throw DomainError("run_ba: epsilon must be positive");
    }
    if (max_iters < 1) {
        throw DomainError("run_ba: max_iters must be >= 1");
    }
    Workspace ws(init1.points(), init2.points(), sigma, spec);
    std::vector<double> p1 = floored(init1.probs());
    std::vector<double> p2 = floored(init2.probs());

    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(std::min(max_iters, 100000)) + 1);
    trace.push_back(ws.refresh(p1, p2));
    bool converged = false;
    bool monotone = true;
    int iter = 0;
    try {
        while (iter < max_iters) {
            ++iter;
            multiplicative_step(p1, ws.user1_scores(p2));
            ws.refresh(p1, p2);
            multiplicative_step(p2, ws.user2_scores(p1));
            const double mi = ws.refresh(p1, p2);
            if (!std::isfinite(mi)) {
                throw NumericalError("non-finite mutual information");
            }
            const double prev = trace.back();
            trace.push_back(mi);
            if (mi < prev - 1e-10 && monotone) {
                monotone = false;
                std::ostringstream os;
                os.precision(17);
                os << "run_ba: I decreased from " << prev << " to " << mi << " at iteration " << iter;
                warn(os.str());
            }
            if (std::fabs(mi - prev) < epsilon) {
                converged = true;
                break;
            }
        }
    } catch (const Error& e) {
        std::ostringstream os;
        os << "run_ba: iteration " << iter << ": " << e.what();
        throw NumericalError(os.str());
    }
    const double achieved = trace.back();
    return BaResult{rebuild(init1, std::move(p1)),
                    rebuild(init2, std::move(p2)),
                    achieved,
                    std::move(trace),
                    iter,
                    converged,
                    monotone};
}

BaResult run_ba(const BaConfig& config, const QuadratureSpec& spec) {
    config.validate();
    const DiscreteDistribution d1 = ba_initial_distribution(config.k1, config.rho1, config.init, config.seed);
    const DiscreteDistribution d2 = ba_initial_distribution(config.k2, config.rho2, config.init, config.seed + 1);
    return run_ba_from(d1, d2, config.sigma, config.epsilon, config.max_iters, spec);
}

} // namespace peakcap
