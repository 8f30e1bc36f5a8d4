#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# peakcap: capacity and energy-per-bit toolkit for the peak-power limited
# two-user Gaussian multiple-access channel
# Copyright (C) 2026 The peakcap authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

"""Reference values for the unit tests, computed with mpmath at 40 digits.

Prints a C++ header on stdout; the checked-in copy lives at
tests/unit/fixtures.hpp. Regenerate with

    python3 tests/oracles/generate_fixtures.py > tests/unit/fixtures.hpp
"""

import mpmath as mp

mp.mp.dps = 40


def gauss_e(f):
    """E[f(Y)] for Y ~ N(0, 1)."""
    w = lambda y: mp.exp(-y * y / 2) / mp.sqrt(2 * mp.pi)
    return mp.quad(lambda y: w(y) * f(y), [-mp.inf, -8, -4, -2, -1, 0, 1, 2, 4, 8, mp.inf])


def logcosh(x):
    x = mp.mpf(x)
    return mp.log(mp.cosh(x))


def mixture_logpdf(means, weights, sigma, y):
    s = mp.mpf(0)
    for m, w in zip(means, weights):
        s += w * mp.npdf(y, m, sigma)
    return mp.log(s)


def mixture_entropy(means, weights, sigma):
    # Per component, matching the breakpoints to each mean.
    h = mp.mpf(0)
    for m, w in zip(means, weights):
        h -= w * gauss_e(lambda t: mixture_logpdf(means, weights, sigma, m + sigma * t))
    return h


def gaussian_entropy(sigma):
    return mp.log(2 * mp.pi * mp.e * sigma**2) / 2


def rate_antipodal(rho):
    rho = mp.mpf(rho)
    return rho - gauss_e(lambda y: logcosh(rho - mp.sqrt(rho) * y))


def antipodal_joint_mi(r1, r2, sigma=1):
    a1, a2 = mp.sqrt(r1), mp.sqrt(r2)
    pts = {}
    for x1 in (-a1, a1):
        for x2 in (-a2, a2):
            u = x1 + x2
            key = mp.nstr(u, 30)
            pts[key] = (u, pts.get(key, (u, 0))[1] + mp.mpf(1) / 4)
    means = [v[0] for v in pts.values()]
    weights = [v[1] for v in pts.values()]
    return mixture_entropy(means, weights, sigma) - gaussian_entropy(sigma)


def antipodal_marginal_mi(r_self, r_other, sigma=1):
    """I(X_self; Y) with the other antipodal user as noise."""
    a, b = mp.sqrt(r_self), mp.sqrt(r_other)
    noise_means, noise_w = [-b, b], [mp.mpf(1) / 2] * 2
    h_cond = mixture_entropy(noise_means, noise_w, sigma)
    return antipodal_joint_mi(r_self, r_other, sigma) + gaussian_entropy(sigma) - h_cond


def main():
    tri = ([-2, 0, 2], [mp.mpf(1) / 4, mp.mpf(1) / 2, mp.mpf(1) / 4])
    values = {
        "kLogCosh1": logcosh(1),
        "kLogCosh0p5": logcosh(mp.mpf("0.5")),
        "kExpectedLogCosh1MinusY": gauss_e(lambda y: logcosh(1 - y)),
        "kTriMixtureEntropy": mixture_entropy(*tri, 1),
        "kTriMixtureLogDensityAt10": mixture_logpdf(*tri, 1, 10),
        "kRateAntipodal1": rate_antipodal(1),
        "kRateAntipodal0p36": rate_antipodal(mp.mpf("0.36")),
        "kJointMiAntipodal11": antipodal_joint_mi(1, 1),
        "kJointMiAntipodal0p36_0p16": antipodal_joint_mi(mp.mpf("0.36"), mp.mpf("0.16")),
        "kMarginalMiAntipodal0p36_0p16": antipodal_marginal_mi(mp.mpf("0.36"), mp.mpf("0.16")),
        "kMarginalMiAntipodal0p16_0p36": antipodal_marginal_mi(mp.mpf("0.16"), mp.mpf("0.36")),
        # Average of the single-user antipodal rates at amplitudes 1.0 and 0.2.
        "kSumRateAntipodal0p36_0p16": (rate_antipodal(1) + rate_antipodal(mp.mpf("0.04"))) / 2,
        "kSumRateAntipodal11": (rate_antipodal(4) + 0) / 2,
        "kCapacityCost1em4": 2 * rate_antipodal(mp.mpf("1e-4")),
    }
    print("// Generated by tests/oracles/generate_fixtures.py (mpmath, 40 digits). Do not edit.")
    print("#pragma once\n")
    print("namespace fixtures {\n")
    for k, v in values.items():
        print(f"inline constexpr double {k} = {mp.nstr(v, 20)};")
    print("\n} // namespace fixtures")


if __name__ == "__main__":
    main()
