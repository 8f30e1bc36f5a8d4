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

#include "peakcap/numerics.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace peakcap {

void QuadratureSpec::validate() const {
    if (node_count < 2) {
        throw DomainError("QuadratureSpec: node_count must be >= 2");
    }
    if (scheme == QuadratureScheme::adaptive_simpson && !(abs_tol > 0.0)) {
        throw DomainError("QuadratureSpec: abs_tol must be > 0 for adaptive_simpson");
    }
}

namespace {

// Number of eigenvalues below z of the symmetric Jacobi matrix for H_n
// (zero diagonal, off-diagonal sqrt(k / 2)), from the Sturm sequence of
// its LDL^T factorization.
int eigenvalues_below(int n, long double z) {
    int count = 0;
    long double d = -z;
    for (int k = 0;; ++k) {
        if (d == 0.0L) {
            d = -1e-300L;
        }
        count += d < 0.0L ? 1 : 0;
        if (k + 1 == n) {
            break;
        }
        d = -z - (0.5L * (k + 1)) / d;
    }
    return count;
}

// Orthonormal Hermite recurrence at z: returns p_n(z), and p_n'(z) in `deriv`.
long double hermite_value(int n, long double z, long double& deriv) {
    const long double pim4 = 0.7511255444649424828587030047762276930510L; // pi^(-1/4)
    long double p1 = pim4;
    long double p2 = 0.0L;
    for (int j = 0; j < n; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0L / (j + 1)) * p2 - std::sqrt(static_cast<long double>(j) / (j + 1)) * p3;
    }
    deriv = std::sqrt(2.0L * n) * p2;
    return p1;
}

// Roots of H_n by bisection on the Sturm count, polished by Newton; weights
// 2 / p_n'(x)^2 on the exp(-x^2) scale.
GaussHermiteRule build_hermite_rule(int n) {
    std::vector<long double> x(static_cast<std::size_t>(n));
    std::vector<long double> w(static_cast<std::size_t>(n));
    const long double bound = std::sqrt(2.0L * n + 2.0L);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // The i-th largest root has exactly n - 1 - i eigenvalues below it.
        const int below = n - 1 - i;
        long double lo = i + 1 == m && n % 2 == 1 ? -1.0L : 0.0L;
        long double hi = bound;
        for (int it = 0; it < 200 && hi - lo > 1e-19L * std::max(1.0L, hi); ++it) {
            const long double mid = 0.5L * (lo + hi);
            (eigenvalues_below(n, mid) <= below ? lo : hi) = mid;
        }
        long double z = 0.5L * (lo + hi);
        long double pp = 0.0L;
        for (int it = 0; it < 3; ++it) {
            const long double p = hermite_value(n, z, pp);
            const long double next = z - p / pp;
            if (next > lo - 1e-12L && next < hi + 1e-12L) {
                z = next;
            }
        }
        hermite_value(n, z, pp);
        if (!std::isfinite(pp) || pp == 0.0L) {
            throw NumericalError("gauss_hermite_rule: root refinement failed");
        }
        if (n % 2 == 1 && i + 1 == m) {
            z = 0.0L;
        }
        x[static_cast<std::size_t>(i)] = z;
        x[static_cast<std::size_t>(n - 1 - i)] = -z;
        w[static_cast<std::size_t>(i)] = 2.0L / (pp * pp);
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
    GaussHermiteRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const long double sqrt2 = std::numbers::sqrt2_v<long double>;
    const long double inv_sqrt_pi = std::numbers::inv_sqrtpi_v<long double>;
    // Ascending order.
    for (int i = 0; i < n; ++i) {
        const auto src = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(sqrt2 * x[src]);
        rule.weights[static_cast<std::size_t>(i)] = static_cast<double>(w[src] * inv_sqrt_pi);
    }
    return rule;
}

struct AdaptiveState {
    double (*thunk)(const void*, double);
    const void* ctx;
    int evaluations = 0;
};

double weighted(AdaptiveState& st, double y) {
    constexpr double inv_sqrt_2pi = 0.3989422804014326779399460599343818684759;
    const double v = st.thunk(st.ctx, y);
    if (!std::isfinite(v)) {
        detail::throw_nonfinite_node(static_cast<std::size_t>(st.evaluations), y, v);
    }
    ++st.evaluations;
    return inv_sqrt_2pi * std::exp(-0.5 * y * y) * v;
}

double simpson_step(AdaptiveState& st, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = weighted(st, lm);
    const double frm = weighted(st, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_step(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

const GaussHermiteRule& gauss_hermite_rule(int node_count) {
    if (node_count < 2) {
        throw DomainError("gauss_hermite_rule: node_count must be >= 2");
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const GaussHermiteRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[node_count];
    if (!slot) {
        slot = std::make_unique<const GaussHermiteRule>(build_hermite_rule(node_count));
    }
    return *slot;
}

double log_cosh(double x) {
    const double ax = std::fabs(x);
    if (ax > 30.0) {
        return ax - std::numbers::ln2 + std::log1p(std::exp(-2.0 * ax));
    }
    // cosh(x) - 1 = 2 sinh^2(x / 2) keeps full relative precision near zero.
    const double s = std::sinh(0.5 * ax);
    return std::log1p(2.0 * s * s);
}

double log_cosh_taylor(double x, int order) {
    if (!(std::fabs(x) < 1.0)) {
        throw DomainError("log_cosh_taylor: requires |x| < 1");
    }
    if (order != 2 && order != 4 && order != 6 && order != 8) {
        throw DomainError("log_cosh_taylor: order must be one of 2, 4, 6, 8");
    }
    static constexpr std::array<double, 4> coeff{0.5, -1.0 / 12.0, 1.0 / 45.0, -17.0 / 2520.0};
    const double x2 = x * x;
    double term = x2;
    double acc = 0.0;
    for (int k = 0; k < order / 2; ++k) {
        acc += coeff[static_cast<std::size_t>(k)] * term;
        term *= x2;
    }
    return acc;
}

double gaussian_affine_moment(double a, double b, int n) {
    if (n < 0) {
        throw DomainError("gaussian_affine_moment: n must be >= 0");
    }
    // sum over even k of C(n, k) a^(n-k) b^k (k-1)!!
    double acc = 0.0;
    double binom = 1.0;      // C(n, k)
    double double_fact = 1.0; // (k-1)!!
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            binom *= static_cast<double>(n - k + 1) / k;
        }
        if (k % 2 == 0) {
            if (k > 0) {
                double_fact *= (k - 1);
            }
            acc += binom * std::pow(a, n - k) * std::pow(b, k) * double_fact;
        }
    }
    return acc;
}

QuadratureSpec scaled_for_log_cosh(const QuadratureSpec& spec, double scale) {
    QuadratureSpec scaled = spec;
    if (spec.scheme == QuadratureScheme::gauss_hermite && std::fabs(scale) > 1.0) {
        // The poles of log cosh sit at distance pi / (2 |scale|) from the real
        // y axis; growing N with scale^2 keeps the Hermite error unchanged.
        scaled.node_count = static_cast<int>(std::ceil(spec.node_count * scale * scale));
    }
    return scaled;
}

double expected_log_cosh_affine(double offset, double scale, const QuadratureSpec& spec) {
    if (std::fabs(offset) < 1e-6 && scale * scale < 1e-6) {
        // log cosh(c) = c^2/2 - c^4/12 + c^6/45 - 17 c^8/2520 + O(c^10)
        const double m2 = gaussian_affine_moment(offset, scale, 2);
        const double m4 = gaussian_affine_moment(offset, scale, 4);
        const double m6 = gaussian_affine_moment(offset, scale, 6);
        const double m8 = gaussian_affine_moment(offset, scale, 8);
        return 0.5 * m2 - m4 / 12.0 + m6 / 45.0 - 17.0 * m8 / 2520.0;
    }
    return gaussian_expectation([&](double y) { return log_cosh(offset - scale * y); },
                                scaled_for_log_cosh(spec, scale));
}

double richardson_limit(std::span<const double> values, double ratio, int levels) {
    if (values.empty()) {
        throw DomainError("richardson_limit: empty sequence");
    }
    if (levels < 0 || static_cast<std::size_t>(levels) >= values.size()) {
        throw DomainError("richardson_limit: need more samples than extrapolation levels");
    }
    std::vector<double> row(values.begin(), values.end());
    double factor = 1.0;
    for (int level = 1; level <= levels; ++level) {
        factor *= ratio;
        for (std::size_t k = 0; k + 1 < row.size(); ++k) {
            row[k] = (factor * row[k + 1] - row[k]) / (factor - 1.0);
        }
        row.pop_back();
    }
    return row.back();
}

namespace detail {

void throw_nonfinite_node(std::size_t index, double y, double value) {
    std::ostringstream os;
    os << "gaussian_expectation: non-finite integrand value " << value << " at node " << index << " (y=" << y
       << ")";
    throw NumericalError(os.str());
}

double adaptive_gaussian_expectation(double (*thunk)(const void*, double), const void* ctx,
                                     const QuadratureSpec& spec) {
    spec.validate();
    AdaptiveState st{thunk, ctx};
    const int panels = spec.node_count;
    const double width = 2.0 * kAdaptiveHalfWidth / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = -kAdaptiveHalfWidth + p * width;
        const double b = a + width;
        const double fa = weighted(st, a);
        const double fm = weighted(st, 0.5 * (a + b));
        const double fb = weighted(st, b);
        const double whole = width / 6.0 * (fa + 4.0 * fm + fb);
        acc += simpson_step(st, a, b, fa, fm, fb, whole, spec.abs_tol / panels, 48);
    }
    return acc;
}

} // namespace detail

} // namespace peakcap
