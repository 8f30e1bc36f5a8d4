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
 * @file numerics.hpp
 * @brief Scalar kernels and Gaussian-weighted quadrature.
 *
 * Every information quantity in the library reduces to expectations of the
 * form E[f(Y)] with Y ~ N(0, 1). Two rules are provided:
 *
 *   - Gauss-Hermite (default, 64 nodes): the physicists' rule on
 *     exp(-t^2) mapped to the standard normal by y = sqrt(2) t. Exact for
 *     polynomials of degree <= 2N - 1 and spectrally convergent for the
 *     smooth integrands used here.
 *   - Adaptive Simpson on y in [-12, 12] with the N(0, 1) density folded
 *     into the integrand. Slow, but independent of the Hermite rule, so it
 *     serves as the reference for golden values.
 *
 * All quantities are in nats.
 */

#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>
#include <sstream>
#include <vector>

#include "peakcap/errors.hpp"

namespace peakcap {

enum class QuadratureScheme { gauss_hermite, adaptive_simpson };

struct QuadratureSpec {
    /// Hermite node count, or the number of initial panels for adaptive Simpson.
    int node_count = 64;
    QuadratureScheme scheme = QuadratureScheme::gauss_hermite;
    /// Absolute tolerance; only read by the adaptive scheme.
    double abs_tol = 1e-10;

    static QuadratureSpec hermite(int nodes = 64) {
        return {nodes, QuadratureScheme::gauss_hermite, 1e-10};
    }
    static QuadratureSpec adaptive(double tol = 1e-10) {
        return {16, QuadratureScheme::adaptive_simpson, tol};
    }

    /// Throws DomainError when node_count < 2, or abs_tol <= 0 for the adaptive scheme.
    void validate() const;
};

/// Hermite rule rescaled to the standard normal: E[f(Y)] ~= sum_i weights[i] * f(nodes[i]).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached, thread-safe access to the N-node rule.
const GaussHermiteRule& gauss_hermite_rule(int node_count);

/// Half-width of the truncated domain used by the adaptive scheme.
inline constexpr double kAdaptiveHalfWidth = 12.0;

/// log(cosh(x)) without overflow. Relative accuracy is kept near zero.
double log_cosh(double x);

/// Truncated series x^2/2 - x^4/12 + x^6/45 - 17 x^8/2520 up to `order`
/// (2, 4, 6 or 8). Requires |x| < 1.
double log_cosh_taylor(double x, int order);

/// E[(a + b Y)^n] for Y ~ N(0, 1), exact.
double gaussian_affine_moment(double a, double b, int n);

/// `spec` with its Hermite node count multiplied by scale^2 when |scale| > 1,
/// for integrands built from log cosh(c - scale * y). Other schemes pass through.
QuadratureSpec scaled_for_log_cosh(const QuadratureSpec& spec, double scale);

/// E[log cosh(offset - scale * Y)] for Y ~ N(0, 1).
///
/// Small arguments (offset and scale^2 both below 1e-6) take the eighth
/// order series with exact Gaussian moments; everything else goes through
/// `scaled_for_log_cosh(spec, scale)`.
double expected_log_cosh_affine(double offset, double scale, const QuadratureSpec& spec);

namespace detail {

[[noreturn]] void throw_nonfinite_node(std::size_t index, double y, double value);

double adaptive_gaussian_expectation(double (*thunk)(const void*, double), const void* ctx,
                                     const QuadratureSpec& spec);

} // namespace detail

/// E[f(Y)] for Y ~ N(0, 1). A non-finite f value aborts with NumericalError
/// naming the node.
template <class F>
double gaussian_expectation(F&& f, const QuadratureSpec& spec) {
    if (spec.scheme == QuadratureScheme::gauss_hermite) {
        const GaussHermiteRule& rule = gauss_hermite_rule(spec.node_count);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double v = f(rule.nodes[i]);
            if (!std::isfinite(v)) {
                detail::throw_nonfinite_node(i, rule.nodes[i], v);
            }
            acc += rule.weights[i] * v;
        }
        return acc;
    }
    using Fn = std::remove_reference_t<F>;
    auto thunk = [](const void* ctx, double y) { return (*static_cast<const Fn*>(ctx))(y); };
    return detail::adaptive_gaussian_expectation(thunk, &f, spec);
}

enum class Stencil { central, forward };

struct Derivatives {
    double first = 0.0;
    double second = 0.0;
};

/// O(h^2) finite-difference estimates of f'(x0) and f''(x0).
///
/// `Stencil::forward` samples x0, x0 + h, x0 + 2h, x0 + 3h only, for
/// functions defined on [x0, inf) such as rate-versus-SNR curves at zero.
template <class F>
Derivatives central_derivatives(F&& f, double x0, double h, Stencil stencil = Stencil::central) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("central_derivatives: step h must be positive and finite");
    }
    auto eval = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "central_derivatives: non-finite value at stencil point x=" << x;
            throw NumericalError(os.str());
        }
        return v;
    };
    Derivatives d;
    if (stencil == Stencil::central) {
        const double fm = eval(x0 - h);
        const double f0 = eval(x0);
        const double fp = eval(x0 + h);
        d.first = (fp - fm) / (2.0 * h);
        d.second = (fp - 2.0 * f0 + fm) / (h * h);
    } else {
        const double f0 = eval(x0);
        const double f1 = eval(x0 + h);
        const double f2 = eval(x0 + 2.0 * h);
        const double f3 = eval(x0 + 3.0 * h);
        d.first = (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
        d.second = (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (h * h);
    }
    return d;
}

/// Richardson extrapolation of a sequence sampled at h_k = h_0 / ratio^k
/// whose error expands as c_1 h + c_2 h^2 + ... . Eliminates `levels`
/// leading terms and returns the extrapolant built from the finest samples.
double richardson_limit(std::span<const double> values, double ratio, int levels);

/// Natural-log quantities to decibels: 10 log10(x).
inline double to_db(double x) { return 10.0 * std::log10(x); }

} // namespace peakcap
