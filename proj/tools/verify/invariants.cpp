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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "checks.hpp"
#include "peakcap/ba.hpp"
#include "peakcap/channel.hpp"
#include "peakcap/distributions.hpp"
#include "peakcap/regions.hpp"
#include "peakcap/verify.hpp"
#include "peakcap/wideband.hpp"

namespace peakcap::verify {
namespace {

// numerics

CheckResult log_cosh_shape(const QuadratureSpec&) {
    Outcome out;
    bool even = true;
    bool bounded = true;
    for (double x : {0.0, 1e-300, 1e-8, 0.3, 1.0, 7.5, 40.0, 710.0, 1e6, 1e300}) {
        even = even && log_cosh(x) == log_cosh(-x);
        bounded = bounded && log_cosh(x) >= 0.0 && log_cosh(x) <= std::fabs(x);
    }
    out.expect(even, "log_cosh even");
    out.expect(bounded, "0 <= log_cosh(x) <= |x|");
    return out.result();
}

CheckResult hermite_exactness(const QuadratureSpec& spec) {
    Outcome out;
    if (spec.scheme != QuadratureScheme::gauss_hermite) {
        out.note("skipped for the adaptive scheme");
        return out.result();
    }
    double worst = 0.0;
    const double moments[4] = {1.0, 1.0, 3.0, 15.0};
    for (int p = 0; p < 4; ++p) {
        if (2 * p > 2 * spec.node_count - 1) {
            continue;
        }
        const double v = gaussian_expectation([p](double y) { return std::pow(y, 2 * p); }, spec);
        worst = std::max(worst, std::fabs(v - moments[p]) / moments[p]);
    }
    out.expect(worst <= 1e-13, "even moments to degree 6, max rel error " + fmt(worst, 3));
    return out.result();
}

CheckResult quadrature_agreement(const QuadratureSpec& spec) {
    Outcome out;
    const QuadratureSpec reference = QuadratureSpec::adaptive(1e-10);
    double worst = 0.0;
    std::string where;
    auto track = [&](double a, double b, const std::string& label) {
        if (std::fabs(a - b) > worst) {
            worst = std::fabs(a - b);
            where = label;
        }
    };
    for (double rho : {1e-3, 0.1, 0.36, 1.0, 1.1}) {
        track(expected_log_cosh_affine(rho, std::sqrt(rho), spec),
              expected_log_cosh_affine(rho, std::sqrt(rho), reference), "log cosh rho=" + fmt(rho, 3));
    }
    for (double rho : {0.25, 1.1}) {
        track(sum_rate_antipodal(rho, rho, DomainMode::strict, spec),
              sum_rate_antipodal(rho, rho, DomainMode::strict, reference), "sum rate rho=" + fmt(rho, 3));
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 4; ++k) {
        const DiscreteDistribution d1 = random_distribution(rng, 1.0);
        const DiscreteDistribution d2 = random_distribution(rng, 0.5);
        for (double sigma : {0.3, 1.0}) {
            const std::string tag = " pair " + std::to_string(k) + " sigma=" + fmt(sigma, 2);
            track(mutual_information_joint(d1, d2, sigma, spec), mutual_information_joint(d1, d2, sigma, reference),
                  "joint MI" + tag);
            track(mi_user2_marginal(d1, d2, sigma, spec), mi_user2_marginal(d1, d2, sigma, reference),
                  "user-2 MI" + tag);
        }
    }
    out.expect(worst <= 1e-8, "active rule vs adaptive Simpson, max dev " + fmt(worst, 3) + " at " + where);
    return out.result();
}

// distributions

bool same(const DiscreteDistribution& a, const DiscreteDistribution& b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::fabs(a.points()[i] - b.points()[i]) > tol || std::fabs(a.probs()[i] - b.probs()[i]) > tol) {
            return false;
        }
    }
    return true;
}

double total(const DiscreteDistribution& d) {
    double s = 0.0;
    for (double p : d.probs()) {
        s += p;
    }
    return s;
}

CheckResult convolution_algebra(const QuadratureSpec&) {
    Outcome out;
    std::mt19937_64 rng(11);
    bool comm = true;
    bool assoc = true;
    bool mass = true;
    bool moments = true;
    bool support = true;
    for (int k = 0; k < 50; ++k) {
        const DiscreteDistribution a = random_distribution(rng, 1.0);
        const DiscreteDistribution b = random_distribution(rng, 0.3);
        const DiscreteDistribution c = random_distribution(rng, 0.7);
        const DiscreteDistribution ab = convolve(a, b);
        comm = comm && same(ab, convolve(b, a), 1e-12);
        assoc = assoc && same(convolve(ab, c), convolve(a, convolve(b, c)), 1e-12);
        mass = mass && std::fabs(total(ab) - 1.0) <= 1e-12;
        moments = moments && std::fabs(ab.mean() - a.mean() - b.mean()) <= 1e-12 &&
                  std::fabs(ab.variance() - a.variance() - b.variance()) <= 1e-12;
        support = support && ab.size() <= a.size() * b.size();
    }
    const DiscreteDistribution g = uniform_grid(5, 1.0);
    const bool collide = convolve(g, g).size() == 9;
    out.expect(comm, "commutative");
    out.expect(assoc, "associative");
    out.expect(mass, "mass preserved");
    out.expect(moments, "mean and variance additive");
    out.expect(support && collide, "support size bounded by K1 K2, coincident sums merged");
    return out.result();
}

// channel

CheckResult chain_rule(const QuadratureSpec& spec) {
    Outcome out;
    std::mt19937_64 rng(13);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const DiscreteDistribution d1 = random_distribution(rng, 0.05 + unit(rng));
        const DiscreteDistribution d2 = random_distribution(rng, 0.05 + unit(rng));
        const double sigma = 0.2 + unit(rng);
        const double joint = mutual_information_joint(d1, d2, sigma, spec);
        worst = std::max({worst,
                          std::fabs(joint - mi_user2_marginal(d1, d2, sigma, spec) -
                                    conditional_mi_user1(d1, d2, sigma, spec)),
                          std::fabs(joint - mi_user1_marginal(d1, d2, sigma, spec) -
                                    conditional_mi_user2(d1, d2, sigma, spec))});
    }
    out.expect(worst <= 1e-8, "both orders, max dev " + fmt(worst, 3));
    return out.result();
}

CheckResult noise_monotone(const QuadratureSpec& spec) {
    Outcome out;
    std::mt19937_64 rng(17);
    bool ok = true;
    for (int k = 0; k < 5; ++k) {
        const DiscreteDistribution d1 = random_distribution(rng, 1.0);
        const DiscreteDistribution d2 = random_distribution(rng, 1.0);
        double prev = std::numeric_limits<double>::infinity();
        for (double sigma = 0.05; sigma <= 3.0; sigma *= 1.25) {
            const double v = mutual_information_joint(d1, d2, sigma, spec);
            ok = ok && v <= prev + 1e-12 && v >= 0.0;
            prev = v;
        }
    }
    out.expect(ok, "I(X1, X2; Y) non-increasing in sigma and non-negative");
    return out.result();
}

CheckResult mixture_symmetry(const QuadratureSpec& spec) {
    Outcome out;
    const GaussianMixture m = output_mixture(uniform_grid(7, 1.0), antipodal(0.5), 0.7);
    bool closed = true;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        closed = closed && std::fabs(m.means()[i] + m.means()[n - 1 - i]) <= 1e-12 &&
                 std::fabs(m.weights()[i] - m.weights()[n - 1 - i]) <= 1e-12;
    }
    out.expect(closed, "symmetric inputs give a symmetric mixture");
    std::mt19937_64 rng(19);
    bool gibbs = true;
    for (int k = 0; k < 20; ++k) {
        const DiscreteDistribution d1 = random_distribution(rng, 1.0);
        const DiscreteDistribution d2 = random_distribution(rng, 1.0);
        const GaussianMixture y = output_mixture(d1, d2, 0.5);
        gibbs = gibbs && kl_point_to_output(d1.points()[0], d2.points()[0], y, spec) >= -1e-10;
    }
    out.expect(gibbs, "D(N(x1 + x2, s^2) || p(Y)) >= 0");
    return out.result();
}

// ba

CheckResult ba_ascent(const QuadratureSpec& spec) {
    Outcome out;
    std::mt19937_64 rng(23);
    bool ok = true;
    for (int k = 0; k < 10; ++k) {
        const DiscreteDistribution d1 = ba_initial_distribution(9, 1.0, BaInit::random, rng());
        const DiscreteDistribution d2 = ba_initial_distribution(7, 0.5, BaInit::random, rng());
        const double sigma = 0.3 + unit(rng);
        const double before = mutual_information_joint(d1, d2, sigma, spec);
        const DiscreteDistribution u1 = ba_update_user1(d1, d2, sigma, spec);
        const double mid = mutual_information_joint(u1, d2, sigma, spec);
        const DiscreteDistribution u2 = ba_update_user2(u1, d2, sigma, spec);
        const double after = mutual_information_joint(u1, u2, sigma, spec);
        ok = ok && mid >= before - 1e-12 && after >= mid - 1e-12;
    }
    out.expect(ok, "each half-step does not decrease I(X1, X2; Y)");
    return out.result();
}

DiscreteDistribution negated(const DiscreteDistribution& d) {
    std::vector<double> pts(d.points().begin(), d.points().end());
    for (double& x : pts) {
        x = -x;
    }
    return make_distribution(std::move(pts), {d.probs().begin(), d.probs().end()}, d.peak_bound());
}

CheckResult ba_sign_symmetry(const QuadratureSpec& spec) {
    Outcome out;
    const DiscreteDistribution d1 = ba_initial_distribution(15, 1.0, BaInit::random, 5);
    const DiscreteDistribution d2 = ba_initial_distribution(15, 1.0, BaInit::random, 6);
    const BaResult a = run_ba_from(d1, d2, 0.6, 1e-30, 200, spec);
    const BaResult b = run_ba_from(negated(d1), negated(d2), 0.6, 1e-30, 200, spec);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        worst = std::max(worst, std::fabs(a.trace[i] - b.trace[i]));
    }
    out.expect(a.trace.size() == b.trace.size() && worst <= 1e-10, "negated grids, max trace dev " + fmt(worst, 3));
    out.expect(a.monotone && b.monotone, "traces non-decreasing");
    return out.result();
}

CheckResult ba_seed_agreement(const QuadratureSpec& spec) {
    Outcome out;
    BaConfig c;
    const BaResult a = run_ba(c, spec);
    c.seed = 7;
    const BaResult b = run_ba(c, spec);
    const double dev = std::fabs(a.achieved_mi - b.achieved_mi);
    out.expect(dev <= 1e-6, "sigma=1, seeds 42 and 7: " + fmt(a.achieved_mi, 10) + " vs " + fmt(b.achieved_mi, 10));
    return out.result();
}

// regions

CheckResult region_closure(const QuadratureSpec& spec) {
    Outcome out;
    std::mt19937_64 rng(29);
    double worst = 0.0;
    bool ordered = true;
    for (int k = 0; k < 20; ++k) {
        const double r1 = 1.1 * (1.0 - unit(rng));
        const double r2 = 1.1 * (1.0 - unit(rng));
        const double sum = sum_rate_antipodal(r1, r2, DomainMode::strict, spec);
        const double k1 = corner_mi(r1, r2, DomainMode::strict, spec);
        const double k2 = corner_mi(r2, r1, DomainMode::strict, spec);
        const double a1 = rate_antipodal(r1, DomainMode::strict, spec);
        const double a2 = rate_antipodal(r2, DomainMode::strict, spec);
        worst = std::max({worst, std::fabs(k1 + a2 - sum), std::fabs(k2 + a1 - sum)});
        ordered = ordered && k1 >= 0.0 && k1 <= a1 && k2 >= 0.0 && k2 <= a2;
    }
    out.expect(worst <= 1e-8, "corner + rate = sum rate, max dev " + fmt(worst, 3));
    out.expect(ordered, "0 <= corner <= single-user rate");
    return out.result();
}

CheckResult rate_shape(const QuadratureSpec& spec) {
    Outcome out;
    bool increasing = true;
    bool concave = true;
    const double h = 0.01;
    for (int i = 1; i < 109; ++i) {
        const double a = rate_antipodal(i * h, DomainMode::strict, spec);
        const double b = rate_antipodal((i + 1) * h, DomainMode::strict, spec);
        const double c = rate_antipodal((i + 2) * h, DomainMode::strict, spec);
        increasing = increasing && b > a;
        concave = concave && a - 2.0 * b + c < 0.0;
    }
    out.expect(increasing, "rate_antipodal strictly increasing on [0.01, 1.1]");
    out.expect(concave, "rate_antipodal strictly concave on [0.01, 1.1]");
    return out.result();
}

CheckResult region_endpoints(const QuadratureSpec& spec) {
    Outcome out;
    const double s1 = 0.6;
    const double s2 = 0.4;
    const std::vector<double> ends{0.0, 1.0};
    const RegionSample r = successive_region(s1, s2, ends, DomainMode::strict, spec);
    const double a1 = rate_antipodal(s1, DomainMode::strict, spec);
    const double a2 = rate_antipodal(s2, DomainMode::strict, spec);
    const double k1 = corner_mi(s1, s2, DomainMode::strict, spec);
    const double k2 = corner_mi(s2, s1, DomainMode::strict, spec);
    // alpha = 0 decodes user 1 first; alpha = 1 decodes user 2 first.
    const bool first = r.pairs[0].r1 == 2.0 * k1 && r.pairs[0].r2 == 2.0 * a2;
    const bool second = r.pairs[1].r1 == 2.0 * a1 && r.pairs[1].r2 == 2.0 * k2;
    out.expect(first && second, "alpha in {0, 1} reproduce the two corner points");
    bool growing = true;
    for (double rho2 : {0.1, 0.3, 0.7}) {
        double prev = -1.0;
        for (int i = 1; i <= 110; i += 3) {
            const double rho1 = 0.01 * i;
            const double gap = gaussian_sum_rate(rho1, rho2) - sum_rate_antipodal(rho1, rho2, DomainMode::strict, spec);
            growing = growing && gap >= prev - 1e-12;
            prev = gap;
        }
    }
    out.expect(growing, "Gaussian minus antipodal sum rate non-decreasing in rho1");
    return out.result();
}

// wideband

CheckResult slope_dominance(const QuadratureSpec& spec) {
    Outcome out;
    int ok = 0;
    int total_points = 0;
    for (double theta : {0.25, 1.0, 4.0}) {
        for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const auto s = slope_region_successive(theta, alpha, spec);
            const auto t = slope_region_tdma(alpha, spec);
            ++total_points;
            ok += (s.first >= t.first - 1e-9 && s.second >= t.second - 1e-9) ? 1 : 0;
        }
    }
    out.expect(ok == total_points, "successive slopes dominate TDMA at " + std::to_string(ok) + "/" +
                                       std::to_string(total_points) + " (theta, alpha)");
    return out.result();
}

CheckResult capacity_cost_shape(const QuadratureSpec& spec) {
    Outcome out;
    bool bounded = capacity_cost_fn(0.0, spec) == 0.0;
    bool concave = true;
    const double h = 0.01;
    for (int i = 0; i < 109; ++i) {
        const double a = capacity_cost_fn(i * h, spec);
        const double b = capacity_cost_fn((i + 1) * h, spec);
        const double c = capacity_cost_fn((i + 2) * h, spec);
        bounded = bounded && b < 2.0 * (i + 1) * h;
        concave = concave && a - 2.0 * b + c <= 1e-10;
    }
    out.expect(bounded, "C(snr) < 2 snr for snr > 0");
    out.expect(concave, "second difference <= 1e-10 on [0, 1.1]");
    return out.result();
}

CheckResult energy_tables(const QuadratureSpec& spec) {
    Outcome out;
    const EnergyPerBit e = min_energy_per_bit(spec);
    bool finite = std::isfinite(e.db_value) && std::isfinite(e.per_use_db_value);
    bool decreasing = true;
    for (std::size_t i = 1; i < e.table.size(); ++i) {
        decreasing = decreasing && e.table[i].snr < e.table[i - 1].snr && e.table[i].estimate < e.table[i - 1].estimate;
    }
    for (double a : {0.25, 0.75}) {
        const auto [d1, d2] = gmac_min_energy(a, 2.0, spec);
        finite = finite && std::isfinite(d1) && std::isfinite(d2);
    }
    out.expect(finite, "dB outputs finite");
    out.expect(decreasing, "snr / C(snr) decreases toward its limit");
    return out.result();
}

} // namespace

const std::vector<Check>& invariant_checks() {
    static const std::vector<Check> checks{
        {"numerics.log_cosh", "numerics", "log_cosh even and bounded", 1.0, log_cosh_shape},
        {"numerics.hermite", "numerics", "Hermite moment exactness", 1.0, hermite_exactness},
        {"numerics.agreement", "numerics", "quadrature vs adaptive reference", 30.0, quadrature_agreement},
        {"distributions.convolve", "distributions", "convolution algebra", 1.0, convolution_algebra},
        {"channel.chain_rule", "channel", "chain rule", 5.0, chain_rule},
        {"channel.noise", "channel", "noise monotonicity", 5.0, noise_monotone},
        {"channel.symmetry", "channel", "mixture symmetry and Gibbs", 5.0, mixture_symmetry},
        {"ba.ascent", "ba", "half-step ascent", 5.0, ba_ascent},
        {"ba.symmetry", "ba", "sign symmetry", 10.0, ba_sign_symmetry},
        {"ba.seeds", "ba", "seed agreement", 30.0, ba_seed_agreement},
        {"regions.closure", "regions", "corner closure", 5.0, region_closure},
        {"regions.rate", "regions", "antipodal rate shape", 5.0, rate_shape},
        {"regions.endpoints", "regions", "region endpoints and gap growth", 5.0, region_endpoints},
        {"wideband.dominance", "wideband", "slope dominance", 10.0, slope_dominance},
        {"wideband.cost", "wideband", "capacity cost shape", 5.0, capacity_cost_shape},
        {"wideband.tables", "wideband", "energy convergence tables", 10.0, energy_tables},
    };
    return checks;
}

} // namespace peakcap::verify
