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

#include "peakcap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "peakcap/errors.hpp"
#include "splitmix.hpp"

namespace peakcap {
namespace {

using detail::splitmix64;
using detail::to_unit;

// exp(-x) underflows to zero in double beyond this.
constexpr double kUnderflowExponent = 745.0;
// Terms this far below the running maximum change the sum by < 1e-17 each.
constexpr double kLseWindow = 40.0;

void require_sigma(double sigma, const char* where) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        std::ostringstream os;
        os << where << ": sigma must be positive and finite";
        throw DomainError(os.str());
    }
}

double clamp_mi(double value, const char* where) {
    if (value >= 0.0) {
        return value;
    }
    if (value >= -1e-10) {
        return 0.0;
    }
    std::ostringstream os;
    os.precision(17);
    os << where << ": negative mutual information " << value;
    throw NumericalError(os.str());
}

// Means u_k = origin + index_k * step with every centre also on the lattice.
struct Lattice {
    double origin = 0.0;
    double step = 0.0;
    std::size_t length = 0;
    std::vector<std::size_t> mean_index;
    std::vector<std::size_t> center_index;
};

bool fit_lattice(std::span<const double> means, std::span<const double> centers, Lattice& out) {
    if (means.size() < 2) {
        return false;
    }
    double step = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < means.size(); ++k) {
        step = std::min(step, means[k] - means[k - 1]);
    }
    if (!(step > 0.0)) {
        return false;
    }
    const double lo = std::min(means.front(), centers.empty() ? means.front() : *std::min_element(centers.begin(), centers.end()));
    const double hi = std::max(means.back(), centers.empty() ? means.back() : *std::max_element(centers.begin(), centers.end()));
    const double span = (hi - lo) / step;
    const std::size_t cap = std::max<std::size_t>(4 * means.size(), means.size() + 4096);
    if (!(span < static_cast<double>(cap))) {
        return false;
    }
    auto index_of = [&](double x, std::size_t& idx) {
        const double q = (x - lo) / step;
        const double r = std::round(q);
        if (std::fabs(q - r) > 1e-7 * std::max(1.0, r)) {
            return false;
        }
        idx = static_cast<std::size_t>(r);
        return true;
    };
    out.origin = lo;
    out.step = step;
    out.length = static_cast<std::size_t>(std::round(span)) + 1;
    out.mean_index.resize(means.size());
    out.center_index.resize(centers.size());
    for (std::size_t k = 0; k < means.size(); ++k) {
        if (!index_of(means[k], out.mean_index[k])) {
            return false;
        }
    }
    for (std::size_t k = 0; k < centers.size(); ++k) {
        if (!index_of(centers[k], out.center_index[k])) {
            return false;
        }
    }
    return true;
}

std::vector<double> lattice_expectation(const GaussianMixture& m, std::span<const double> centers,
                                        const Lattice& lat, const GaussHermiteRule& rule) {
    const double sigma = m.sigma();
    const std::size_t len = lat.length;
    const double wmax = *std::max_element(m.weights().begin(), m.weights().end());
    const double log_wmax = std::log(wmax);
    const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * sigma * sigma);

    std::vector<double> w(len, 0.0);
    for (std::size_t k = 0; k < m.size(); ++k) {
        w[lat.mean_index[k]] = m.weights()[k] / wmax;
    }
    std::size_t first = len;
    std::size_t last = 0;  // non-empty: weights sum to one
    for (std::size_t l = 0; l < len; ++l) {
        if (w[l] > 0.0) {
            first = std::min(first, l);
            last = l;
        }
    }

    const double ratio = lat.step / sigma;
    const std::size_t nodes = rule.nodes.size();
    // kernel[e] holds exp(-(d * step / sigma + t)^2 / 2) for d = (len - 1) - e,
    // so that the sum over lattice sites l runs forward through memory.
    std::vector<double> kernel(2 * len - 1);
    std::vector<double> out(centers.size(), 0.0);
    for (std::size_t i = 0; i < nodes; ++i) {
        const double t = rule.nodes[i];
        const double reach = std::sqrt(2.0 * kUnderflowExponent);
        // Offsets d with |d * ratio + t| <= reach.
        const double lim = static_cast<double>(len);
        const auto dlo = static_cast<long long>(std::max(-lim, std::ceil((-reach - t) / ratio)));
        const auto dhi = static_cast<long long>(std::min(lim, std::floor((reach - t) / ratio)));
        for (std::size_t e = 0; e < kernel.size(); ++e) {
            const long long d = static_cast<long long>(len) - 1 - static_cast<long long>(e);
            if (d < dlo || d > dhi) {
                kernel[e] = 0.0;
            } else {
                const double z = static_cast<double>(d) * ratio + t;
                kernel[e] = std::exp(-0.5 * z * z);
            }
        }
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const auto ci = static_cast<long long>(lat.center_index[c]);
            // d = ci - l must satisfy dlo <= d <= dhi.
            const long long lmin = std::max(static_cast<long long>(first), ci - dhi);
            const long long lmax = std::min(static_cast<long long>(last), ci - dlo);
            double acc = 0.0;
            const double* kp = kernel.data() + (static_cast<long long>(len) - 1 - ci);
            for (long long l = lmin; l <= lmax; ++l) {
                acc += w[static_cast<std::size_t>(l)] * kp[l];
            }
            double logp;
            if (acc > 1e-250) {
                logp = std::log(acc) + log_wmax + log_norm;
            } else {
                logp = log_density(m, centers[c] + sigma * t);
            }
            out[c] += rule.weights[i] * logp;
        }
    }
    return out;
}

} // namespace

void GmacModel::validate() const {
    auto ok = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!ok(rho1)) {
        throw DomainError("GmacModel: rho1 must be positive and finite");
    }
    if (!ok(rho2)) {
        throw DomainError("GmacModel: rho2 must be positive and finite");
    }
    if (!ok(sigma)) {
        throw DomainError("GmacModel: sigma must be positive and finite");
    }
}

GaussianMixture GaussianMixture::make(std::vector<double> means, std::vector<double> weights, double sigma) {
    require_sigma(sigma, "GaussianMixture");
    if (means.size() != weights.size() || means.empty()) {
        throw DomainError("GaussianMixture: means and weights must be non-empty and of equal length");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < means.size(); ++k) {
        if (!std::isfinite(means[k]) || !std::isfinite(weights[k]) || weights[k] < 0.0) {
            throw DomainError("GaussianMixture: non-finite mean or invalid weight");
        }
        if (k > 0 && !(means[k] > means[k - 1])) {
            throw DomainError("GaussianMixture: means must be strictly increasing");
        }
        total += weights[k];
    }
    if (std::fabs(total - 1.0) > 1e-9) {
        throw DomainError("GaussianMixture: weights must sum to 1");
    }
    for (double& w : weights) {
        w /= total;
    }
    return GaussianMixture(std::move(means), std::move(weights), sigma);
}

GaussianMixture output_mixture(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma) {
    require_sigma(sigma, "output_mixture");
    const DiscreteDistribution u = convolve(d1, d2);
    return GaussianMixture::make({u.points().begin(), u.points().end()}, {u.probs().begin(), u.probs().end()},
                                 sigma);
}

GaussianMixture single_user_mixture(const DiscreteDistribution& d, double sigma) {
    require_sigma(sigma, "single_user_mixture");
    return GaussianMixture::make({d.points().begin(), d.points().end()}, {d.probs().begin(), d.probs().end()},
                                 sigma);
}

double log_density(const GaussianMixture& m, double y) {
    if (!std::isfinite(y)) {
        throw DomainError("log_density: y must be finite");
    }
    const auto means = m.means();
    const auto weights = m.weights();
    const double inv2s2 = 0.5 / (m.sigma() * m.sigma());
    const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * m.sigma() * m.sigma());
    const std::size_t n = means.size();

    // Start at the nearest mean and walk outwards. Weights are <= 1, so once
    // the Gaussian factor alone drops kLseWindow below the running maximum no
    // further component on that side can matter.
    const std::size_t hi0 = static_cast<std::size_t>(std::lower_bound(means.begin(), means.end(), y) - means.begin());
    double tmax = -std::numeric_limits<double>::infinity();
    auto term = [&](std::size_t k) {
        const double d = y - means[k];
        return std::log(weights[k]) - d * d * inv2s2;
    };
    auto gauss = [&](std::size_t k) {
        const double d = y - means[k];
        return -d * d * inv2s2;
    };
    std::size_t lo_end = hi0;  // first index included on the left
    std::size_t hi_end = hi0;  // one past last index included on the right
    while (hi_end < n) {
        if (gauss(hi_end) < tmax - kLseWindow) {
            break;
        }
        tmax = std::max(tmax, term(hi_end));
        ++hi_end;
    }
    while (lo_end > 0) {
        if (gauss(lo_end - 1) < tmax - kLseWindow) {
            break;
        }
        tmax = std::max(tmax, term(lo_end - 1));
        --lo_end;
    }
    // The right scan ran with a smaller running maximum; it is still a
    // superset of what is needed.
    if (!std::isfinite(tmax)) {
        // All weights in range are zero: fall back to the full sum.
        lo_end = 0;
        hi_end = n;
        for (std::size_t k = 0; k < n; ++k) {
            tmax = std::max(tmax, term(k));
        }
    }
    double acc = 0.0;
    for (std::size_t k = lo_end; k < hi_end; ++k) {
        if (weights[k] > 0.0) {
            acc += std::exp(term(k) - tmax);
        }
    }
    return tmax + std::log(acc) + log_norm;
}

std::vector<double> expected_log_density(const GaussianMixture& m, std::span<const double> centers,
                                         const QuadratureSpec& spec) {
    spec.validate();
    if (spec.scheme == QuadratureScheme::gauss_hermite) {
        Lattice lat;
        if (fit_lattice(m.means(), centers, lat)) {
            return lattice_expectation(m, centers, lat, gauss_hermite_rule(spec.node_count));
        }
    }
    std::vector<double> out(centers.size());
    const double sigma = m.sigma();
    for (std::size_t c = 0; c < centers.size(); ++c) {
        const double u = centers[c];
        out[c] = gaussian_expectation([&](double y) { return log_density(m, u + sigma * y); }, spec);
    }
    return out;
}

double gaussian_entropy(double sigma) {
    require_sigma(sigma, "gaussian_entropy");
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * sigma * sigma);
}

double differential_entropy(const GaussianMixture& m, const QuadratureSpec& spec) {
    const std::vector<double> g = expected_log_density(m, m.means(), spec);
    double h = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m.weights()[k] > 0.0) {
            h -= m.weights()[k] * g[k];
        }
    }
    return h;
}

double mutual_information_joint(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                                const QuadratureSpec& spec) {
    const GaussianMixture m = output_mixture(d1, d2, sigma);
    return clamp_mi(differential_entropy(m, spec) - gaussian_entropy(sigma), "mutual_information_joint");
}

double conditional_mi_user1(const DiscreteDistribution& d1, const DiscreteDistribution&, double sigma,
                            const QuadratureSpec& spec) {
    const GaussianMixture m = single_user_mixture(d1, sigma);
    return clamp_mi(differential_entropy(m, spec) - gaussian_entropy(sigma), "conditional_mi_user1");
}

double conditional_mi_user2(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                            const QuadratureSpec& spec) {
    return conditional_mi_user1(d2, d1, sigma, spec);
}

namespace {

// sum_{x_o} p(x_o) D(p(Y | x_o) || p(Y)) where user `other` is the one
// conditioned on and `noise` is averaged out.
double marginal_mi(const DiscreteDistribution& noise, const DiscreteDistribution& other, double sigma,
                   const QuadratureSpec& spec, const char* where) {
    const GaussianMixture out = output_mixture(noise, other, sigma);
    const GaussianMixture cond = single_user_mixture(noise, sigma);
    std::vector<double> centers;
    centers.reserve(noise.size() * other.size());
    for (double xo : other.points()) {
        for (double xn : noise.points()) {
            centers.push_back(xn + xo);
        }
    }
    const std::vector<double> g_out = expected_log_density(out, centers, spec);
    const std::vector<double> g_cond = expected_log_density(cond, noise.points(), spec);

    double total = 0.0;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < other.size(); ++j) {
        // E over p(Y | x_o) of log p(Y | x_o); p(Y | x_o) is `cond` shifted by x_o.
        double d = 0.0;
        for (std::size_t i = 0; i < noise.size(); ++i, ++idx) {
            d += noise.probs()[i] * (g_cond[i] - g_out[idx]);
        }
        total += other.probs()[j] * d;
    }
    return clamp_mi(total, where);
}

} // namespace

double mi_user2_marginal(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                         const QuadratureSpec& spec) {
    return marginal_mi(d1, d2, sigma, spec, "mi_user2_marginal");
}

double mi_user1_marginal(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                         const QuadratureSpec& spec) {
    return marginal_mi(d2, d1, sigma, spec, "mi_user1_marginal");
}

double kl_point_to_output(double x1, double x2, const GaussianMixture& m, const QuadratureSpec& spec) {
    const double u = x1 + x2;
    if (!std::isfinite(u)) {
        throw DomainError("kl_point_to_output: non-finite point");
    }
    const double sigma = m.sigma();
    const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * sigma * sigma);
    const double d = gaussian_expectation(
        [&](double t) { return log_norm - 0.5 * t * t - log_density(m, u + sigma * t); }, spec);
    return clamp_mi(d, "kl_point_to_output");
}

namespace {

std::size_t sample_index(std::span<const double> cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

} // namespace

MonteCarloEstimate monte_carlo_mi(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double sigma,
                                  std::int64_t n, std::uint64_t seed) {
    require_sigma(sigma, "monte_carlo_mi");
    if (n < 10000) {
        throw DomainError("monte_carlo_mi: n must be >= 10000");
    }
    const GaussianMixture m = output_mixture(d1, d2, sigma);
    std::vector<double> cdf1(d1.size());
    std::vector<double> cdf2(d2.size());
    std::partial_sum(d1.probs().begin(), d1.probs().end(), cdf1.begin());
    std::partial_sum(d2.probs().begin(), d2.probs().end(), cdf2.begin());

    const double inv2s2 = 0.5 / (sigma * sigma);
    const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * sigma * sigma);
    const std::uint64_t base = splitmix64(seed);
    // Welford accumulation.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        const std::uint64_t ctr = base + 4 * static_cast<std::uint64_t>(k);
        const double u1 = to_unit(splitmix64(ctr));
        const double u2 = to_unit(splitmix64(ctr + 1));
        const double ua = to_unit(splitmix64(ctr + 2));
        const double ub = to_unit(splitmix64(ctr + 3));
        const double x1 = d1.points()[sample_index(cdf1, u1)];
        const double x2 = d2.points()[sample_index(cdf2, u2)];
        // Box-Muller, cosine branch.
        const double z = sigma * std::sqrt(-2.0 * std::log(ua)) * std::cos(2.0 * std::numbers::pi * ub);
        const double center = x1 + x2;
        const double y = center + z;
        const double dy = y - center;
        const double v = (log_norm - dy * dy * inv2s2) - log_density(m, y);
        const double delta = v - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (v - mean);
    }
    MonteCarloEstimate est;
    est.estimate = mean;
    const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    est.std_error = std::sqrt(var / static_cast<double>(n));
    return est;
}

} // namespace peakcap
