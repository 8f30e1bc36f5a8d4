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

// Generated by tests/oracles/generate_fixtures.py (mpmath, 40 digits). Do not edit.
#pragma once

namespace fixtures {

inline constexpr double kLogCosh1 = 0.43378083048302718703;
inline constexpr double kLogCosh0p5 = 0.12011450695827752463;
inline constexpr double kExpectedLogCosh1MinusY = 0.663169179653168388;
inline constexpr double kTriMixtureEntropy = 1.960741692770393743;
inline constexpr double kTriMixtureLogDensityAt10 = -34.305232863864604331;
inline constexpr double kRateAntipodal1 = 0.336830820346831612;
inline constexpr double kRateAntipodal0p36 = 0.1532437371060416877;
inline constexpr double kJointMiAntipodal11 = 0.54180315956572100121;
inline constexpr double kJointMiAntipodal0p36_0p16 = 0.20891619624373942357;
inline constexpr double kMarginalMiAntipodal0p36_0p16 = 0.13473825945554192823;
inline constexpr double kMarginalMiAntipodal0p16_0p36 = 0.055672459137697735871;
inline constexpr double kSumRateAntipodal0p36_0p16 = 0.17822049677083849433;
inline constexpr double kSumRateAntipodal11 = 0.31636009686843349083;
inline constexpr double kCapacityCost1em4 = 0.000099995000333291675331;

} // namespace fixtures
