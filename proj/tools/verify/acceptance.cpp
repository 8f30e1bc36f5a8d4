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
#include <sstream>

#include "checks.hpp"
#include "peakcap/ba.hpp"
#include "peakcap/channel.hpp"
#include "peakcap/distributions.hpp"
#include "peakcap/regions.hpp"
#include "peakcap/verify.hpp"
#include "peakcap/wideband.hpp"

namespace peakcap::verify {
namespace {

constexpr double kTargetMinEnergyDb = -1.59;

CheckResult c1_min_energy(const QuadratureSpec& spec) {
    Outcome out;
    const EnergyPerBit e = min_energy_per_bit(spec);
    out.expect(std::fabs(e.db_value - kTargetMinEnergyDb) <= 0.02, "Eb/N0min = " + fmt(e.db_value, 4) + " dB");
    double worst = 0.0;
    for (double a : {0.25, 0.5, 0.75}) {
        for (double t : {0.5, 1.0, 2.0}) {
            const auto [d1, d2] = gmac_min_energy(a, t, spec);
            worst = std::max({worst, std::fabs(d1 - kTargetMinEnergyDb), std::fabs(d2 - kTargetMinEnergyDb)});
        }
    }
    out.expect(worst <= 0.02, "GMAC per-user limits within " + fmt(worst, 4) + " dB of -1.59 over 9 (alpha, theta)");
    out.note("per-use rate reading gives " + fmt(e.per_use_db_value, 4) + " dB");
    return out.result();
}

CheckResult c2_slope(const QuadratureSpec& spec) {
    Outcome out;
    const double s0 = slope_s0(spec);
    out.expect(std::fabs(s0 - 1.0) <= 0.01, "S0 = " + fmt(s0, 6) + " (target 1 +- 0.01)");
    const double half = slope_s0(spec, 0.5 * kSlopeStep);
    out.note("S0 at h/2 = " + fmt(half, 6));
    return out.result();
}

CheckResult c3_slope_regions(const QuadratureSpec& spec) {
    Outcome out;
    for (double t : {0.1, 1.0, 10.0}) {
        const auto [s1, s2] = slope_region_successive(t, 0.5, spec);
        out.expect(std::fabs(s1 - 1.0) <= 0.02 && std::fabs(s2 - 1.0) <= 0.02,
                   "successive(theta=" + fmt(t, 3) + ") = (" + fmt(s1, 4) + ", " + fmt(s2, 4) + ")");
    }
    for (double a : {0.25, 0.5, 0.75}) {
        const auto [s1, s2] = slope_region_tdma(a, spec);
        out.expect(std::fabs(s1 - a) <= 0.02 && std::fabs(s2 - (1.0 - a)) <= 0.02,
                   "tdma(alpha=" + fmt(a, 3) + ") = (" + fmt(s1, 4) + ", " + fmt(s2, 4) + ")");
    }
    int dominated = 0;
    int total = 0;
    for (double t : {0.1, 1.0, 10.0}) {
        for (double a : {0.25, 0.5, 0.75}) {
            const auto succ = slope_region_successive(t, a, spec);
            const auto tdma = slope_region_tdma(a, spec);
            ++total;
            if (succ.first >= tdma.first - 1e-9 && succ.second >= tdma.second - 1e-9) {
                ++dominated;
            }
        }
    }
    out.expect(dominated == total, "successive >= tdma componentwise at " + std::to_string(dominated) + "/" +
                                       std::to_string(total) + " (theta, alpha)");
    return out.result();
}

CheckResult c4_tdma_gap(const QuadratureSpec& spec) {
    Outcome out;
    const auto g5 = tdma_energy_gap(0.5, spec);
    out.expect(std::fabs(g5.first - 3.01) <= 0.03 && std::fabs(g5.second - 3.01) <= 0.03,
               "alpha=0.5: (" + fmt(g5.first, 4) + ", " + fmt(g5.second, 4) + ") dB");
    const auto g25 = tdma_energy_gap(0.25, spec);
    out.expect(std::fabs(g25.first - 6.02) <= 0.03 && std::fabs(g25.second - 1.25) <= 0.03,
               "alpha=0.25: (" + fmt(g25.first, 4) + ", " + fmt(g25.second, 4) + ") dB");
    return out.result();
}

CheckResult c5_closed_forms(const QuadratureSpec& spec) {
    Outcome out;
    std::mt19937_64 rng(20240517);
    double dev_a = 0.0;
    double dev_b = 0.0;
    double dev_c = 0.0;
    double dev_corner = 0.0;
    double dev_closure = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double r1 = 1.1 * (1.0 - unit(rng));
        const double r2 = 1.1 * (1.0 - unit(rng));
        const DiscreteDistribution d1 = antipodal(r1);
        const DiscreteDistribution d2 = antipodal(r2);
        const double ra = rate_antipodal(r1, DomainMode::strict, spec);
        const double rb = rate_antipodal(r2, DomainMode::strict, spec);
        const double sum = sum_rate_antipodal(r1, r2, DomainMode::strict, spec);
        const double k1 = corner_mi(r1, r2, DomainMode::strict, spec);
        const double k2 = corner_mi(r2, r1, DomainMode::strict, spec);
        dev_a = std::max(dev_a, std::fabs(ra - conditional_mi_user1(d1, d2, 1.0, spec)));
        dev_b = std::max(dev_b, std::fabs(rb - conditional_mi_user2(d1, d2, 1.0, spec)));
        dev_c = std::max(dev_c, std::fabs(sum - mutual_information_joint(d1, d2, 1.0, spec)));
        dev_corner = std::max({dev_corner, std::fabs(k1 - mi_user1_marginal(d1, d2, 1.0, spec)),
                               std::fabs(k2 - mi_user2_marginal(d1, d2, 1.0, spec))});
        dev_closure = std::max({dev_closure, std::fabs(k1 + rb - sum), std::fabs(k2 + ra - sum)});
    }
    out.expect(dev_a <= 1e-8, "single-user rate user 1 max dev " + fmt(dev_a, 3));
    out.expect(dev_b <= 1e-8, "single-user rate user 2 max dev " + fmt(dev_b, 3));
    out.expect(dev_c <= 1e-8, "sum rate vs joint MI max dev " + fmt(dev_c, 3));
    out.expect(dev_corner <= 1e-8, "corner points vs marginal MI max dev " + fmt(dev_corner, 3));
    out.expect(dev_closure <= 1e-8, "chain-rule closure max dev " + fmt(dev_closure, 3));
    return out.result();
}

double min_abs_point(const DiscreteDistribution& d) {
    double m = std::numeric_limits<double>::infinity();
    for (double b : d.points()) {
        m = std::min(m, std::fabs(b));
    }
    return m;
}

// With rho1 = rho2 the objective is symmetric under swapping the users, so
// the non-antipodal law may land on either index depending on the start.
const DiscreteDistribution& structured_user(const BaResult& r, int& index) {
    const bool first = r.dist1.max_prob() <= r.dist2.max_prob();
    index = first ? 1 : 2;
    return first ? r.dist1 : r.dist2;
}

CheckResult c6_ba_behaviour(const QuadratureSpec& spec) {
    Outcome out;
    constexpr double spacing = 0.04;

    BaConfig base;
    BaConfig c1 = base;
    c1.epsilon = 1e-10;
    const BaResult r1 = run_ba(c1, spec);
    const DiscreteDistribution p2 = prune(r1.dist2, 1e-6);
    const bool antipodal2 = p2.size() == 2 && std::fabs(p2.points()[0] + 1.0) < 1e-12 &&
                            std::fabs(p2.points()[1] - 1.0) < 1e-12 && std::fabs(p2.probs()[0] - 0.5) <= 1e-3 &&
                            std::fabs(p2.probs()[1] - 0.5) <= 1e-3;
    out.expect(antipodal2 && r1.converged, "sigma=1 (eps 1e-10): user 2 support after prune(1e-6) = " +
                                               std::to_string(p2.size()) + " points, p = " +
                                               fmt(p2.probs()[0], 6));

    bool monotone = r1.monotone;
    BaResult runs[3] = {r1, r1, r1};
    const double sigmas[3] = {0.5, 0.3, 0.003};
    for (int k = 0; k < 3; ++k) {
        BaConfig c = base;
        c.sigma = sigmas[k];
        runs[k] = run_ba(c, spec);
        monotone = monotone && runs[k].monotone;
    }
    out.expect(monotone, "traces non-decreasing within 1e-10 for sigma in {1, 0.5, 0.3, 0.003}");

    int idx05 = 0;
    int idx03 = 0;
    int idx0003 = 0;
    const DiscreteDistribution s05 = prune(structured_user(runs[0], idx05), 1e-4);
    const DiscreteDistribution s03 = prune(structured_user(runs[1], idx03), 1e-4);
    const DiscreteDistribution& s0003 = structured_user(runs[2], idx0003);

    out.expect(s03.size() >= 3 && min_abs_point(s03) < spacing,
               "sigma=0.3: user " + std::to_string(idx03) + " has " + std::to_string(s03.size()) +
                   " points, min |b| = " + fmt(min_abs_point(s03), 3));
    out.expect(!(min_abs_point(s05) < spacing), "sigma=0.5: user " + std::to_string(idx05) +
                                                    " min |b| = " + fmt(min_abs_point(s05), 3));
    out.expect(s0003.max_prob() < 0.1,
               "sigma=0.003: user " + std::to_string(idx0003) + " max mass " + fmt(s0003.max_prob(), 4));
    out.note("user-1 literal: sigma=0.3 min |b| " + fmt(min_abs_point(prune(runs[1].dist1, 1e-4)), 3) +
             ", sigma=0.5 min |b| " + fmt(min_abs_point(prune(runs[0].dist1, 1e-4)), 3) +
             ", sigma=0.003 max mass " + fmt(runs[2].dist1.max_prob(), 4));
    return out.result();
}

CheckResult c7_ba_dominance(const QuadratureSpec& spec) {
    Outcome out;
    const DiscreteDistribution anti = antipodal(1.0);
    const DiscreteDistribution uni = uniform_grid(51, 1.0);
    for (double sigma : {1.0, 0.5, 0.2, 0.05}) {
        BaConfig c;
        c.sigma = sigma;
        const BaResult r = run_ba(c, spec);
        const double aa = mutual_information_joint(anti, anti, sigma, spec);
        const double ua = mutual_information_joint(uni, anti, sigma, spec);
        const double uu = mutual_information_joint(uni, uni, sigma, spec);
        const double best = std::max({aa, ua, uu});
        out.expect(r.achieved_mi >= best - 1e-6, "sigma=" + fmt(sigma, 3) + ": BA " + fmt(r.achieved_mi, 6) +
                                                     " vs best fixed " + fmt(best, 6));
    }
    return out.result();
}

// Exhaustive search over (p1(-a), p2(-b)) on a 1e-3 grid, then three rounds
// of local grids shrinking tenfold.
double brute_force_two_point(double rho1, double rho2, double sigma, const QuadratureSpec& spec) {
    const double a = std::sqrt(rho1);
    const double b = std::sqrt(rho2);
    auto mi = [&](double q, double r) {
        return mutual_information_joint(make_distribution({-a, a}, {q, 1.0 - q}, a),
                                        make_distribution({-b, b}, {r, 1.0 - r}, b), sigma, spec);
    };
    double best = -1.0;
    double bq = 0.5;
    double br = 0.5;
    for (int i = 1; i < 1000; ++i) {
        for (int j = 1; j < 1000; ++j) {
            const double q = i * 1e-3;
            const double r = j * 1e-3;
            const double v = mi(q, r);
            if (v > best) {
                best = v;
                bq = q;
                br = r;
            }
        }
    }
    double step = 1e-4;
    for (int round = 0; round < 3; ++round, step *= 0.1) {
        const double cq = bq;
        const double cr = br;
        for (int i = -10; i <= 10; ++i) {
            for (int j = -10; j <= 10; ++j) {
                const double q = std::clamp(cq + i * step, 1e-9, 1.0 - 1e-9);
                const double r = std::clamp(cr + j * step, 1e-9, 1.0 - 1e-9);
                const double v = mi(q, r);
                if (v > best) {
                    best = v;
                    bq = q;
                    br = r;
                }
            }
        }
    }
    return best;
}

CheckResult c8_brute_force(const QuadratureSpec& spec) {
    Outcome out;
    struct Case {
        double rho1, rho2, sigma;
    };
    for (const Case& c : {Case{1.0, 0.25, 0.8}, Case{0.5, 1.0, 0.4}}) {
        BaConfig cfg;
        cfg.k1 = 2;
        cfg.k2 = 2;
        cfg.rho1 = c.rho1;
        cfg.rho2 = c.rho2;
        cfg.sigma = c.sigma;
        cfg.epsilon = 1e-13;
        cfg.max_iters = 100000;
        const BaResult r = run_ba(cfg, spec);
        const double brute = brute_force_two_point(c.rho1, c.rho2, c.sigma, spec);
        out.expect(std::fabs(r.achieved_mi - brute) <= 1e-5,
                   "(rho1, rho2, sigma) = (" + fmt(c.rho1, 3) + ", " + fmt(c.rho2, 3) + ", " + fmt(c.sigma, 3) +
                       "): BA " + fmt(r.achieved_mi, 9) + " vs search " + fmt(brute, 9));
    }
    return out.result();
}

CheckResult c9_monte_carlo(const QuadratureSpec& spec) {
    Outcome out;
    std::mt19937_64 rng(99991);
    for (int k = 0; k < 5; ++k) {
        const double rho1 = 0.05 + 1.05 * unit(rng);
        const double rho2 = 0.05 + 1.05 * unit(rng);
        const double sigma = 0.3 + 1.2 * unit(rng);
        const DiscreteDistribution d1 = random_distribution(rng, rho1);
        const DiscreteDistribution d2 = random_distribution(rng, rho2);
        const double q = mutual_information_joint(d1, d2, sigma, spec);
        const MonteCarloEstimate mc = monte_carlo_mi(d1, d2, sigma, 1000000, 1000 + static_cast<std::uint64_t>(k));
        const double z = std::fabs(q - mc.estimate) / mc.std_error;
        out.expect(z <= 3.0, "config " + std::to_string(k + 1) + ": |quad - MC| = " + fmt(z, 3) + " SE");
    }
    return out.result();
}

CheckResult c10_infinite_bandwidth(const QuadratureSpec& spec) {
    Outcome out;
    const std::vector<double> widths{1.0, 10.0, 100.0, 1000.0, 10000.0};
    const auto single = infinite_bw_rate(1.0, 1.0, widths, spec);
    const auto sum = infinite_bw_sum_rate(1.0, 1.0, 1.0, widths, spec);
    bool monotone = true;
    for (std::size_t k = 1; k < single.size(); ++k) {
        monotone = monotone && single[k].second >= single[k - 1].second;
    }
    // W = 1000 is the first grid point with P / (N0 W) <= 1e-3.
    out.expect(std::fabs(single[3].second - 1.0) <= 0.01, "single user at SNR 1e-3: " + fmt(single[3].second, 6));
    out.expect(std::fabs(sum[3].second - 2.0) <= 0.02, "sum at SNR 1e-3: " + fmt(sum[3].second, 6) + " (target 2)");
    out.expect(monotone, "rate non-decreasing in W");
    const double ratio = succ_tdma_ratio(1.0, 1.0, 0.5);
    out.expect(ratio == 2.0, "succ_tdma_ratio(P, P, 0.5) = " + fmt(ratio, 17));
    return out.result();
}

CheckResult c11_region_geometry(const QuadratureSpec& spec) {
    Outcome out;
    const std::vector<double> alphas = alpha_grid(101);
    const RegionSample succ = successive_region(0.6, 0.4, alphas, DomainMode::strict, spec);
    const RegionSample tdma = tdma_region(0.6, 0.4, alphas, DomainMode::strict, spec);
    int ok = 0;
    int strict_both = 0;
    for (const RatePair& t : tdma.pairs) {
        bool dominated = false;
        bool both = false;
        for (const RatePair& s : succ.pairs) {
            const bool gt1 = s.r1 > t.r1;
            const bool gt2 = s.r2 > t.r2;
            both = both || (gt1 && gt2);
            // An endpoint of the TDMA line sits on an axis at the single-user
            // rate, which no pair can exceed; there, require >= in that
            // coordinate and > in the other.
            const bool endpoint = t.alpha == 0.0 || t.alpha == 1.0;
            if (endpoint) {
                dominated = dominated || (s.r1 >= t.r1 - 1e-15 && s.r2 >= t.r2 - 1e-15 && (gt1 || gt2));
            } else {
                dominated = dominated || (gt1 && gt2);
            }
        }
        ok += dominated ? 1 : 0;
        strict_both += both ? 1 : 0;
    }
    out.expect(ok == static_cast<int>(tdma.pairs.size()),
               "TDMA pairs dominated: " + std::to_string(ok) + "/" + std::to_string(tdma.pairs.size()));
    out.note("strictly in both coordinates: " + std::to_string(strict_both) + "/" + std::to_string(tdma.pairs.size()));

    bool below = true;
    bool growing = true;
    for (double rho2 : {0.2, 0.5, 1.0}) {
        double prev_gap = -1.0;
        for (int i = 1; i <= 110; ++i) {
            const double rho1 = 0.01 * i;
            const double gap = gaussian_sum_rate(rho1, rho2) - sum_rate_antipodal(rho1, rho2, DomainMode::strict, spec);
            below = below && gap >= 0.0;
            growing = growing && gap >= prev_gap - 1e-12;
            prev_gap = gap;
        }
    }
    out.expect(below, "antipodal sum rate <= Gaussian baseline on rho1 in [0.01, 1.1], rho2 in {0.2, 0.5, 1}");
    out.expect(growing, "gap non-decreasing in rho1");
    return out.result();
}

} // namespace

const std::vector<Check>& acceptance_checks() {
    static const std::vector<Check> checks{
        {"c1", "acceptance", "minimum energy per bit", 10.0, c1_min_energy},
        {"c2", "acceptance", "wideband slope S0", 5.0, c2_slope},
        {"c3", "acceptance", "slope regions", 10.0, c3_slope_regions},
        {"c4", "acceptance", "TDMA energy gap", 10.0, c4_tdma_gap},
        {"c5", "acceptance", "closed form vs quadrature", 30.0, c5_closed_forms},
        {"c6", "acceptance", "BA support structure", 180.0, c6_ba_behaviour},
        {"c7", "acceptance", "BA dominance over fixed inputs", 120.0, c7_ba_dominance},
        {"c8", "acceptance", "BA vs brute force (K=2)", 60.0, c8_brute_force},
        {"c9", "acceptance", "Monte Carlo agreement", 60.0, c9_monte_carlo},
        {"c10", "acceptance", "infinite-bandwidth limits", 5.0, c10_infinite_bandwidth},
        {"c11", "acceptance", "region geometry", 10.0, c11_region_geometry},
    };
    return checks;
}

} // namespace peakcap::verify
