// Copyright 2026 The ncorlicz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef ORLICZ_TESTS_ORACLES_HPP
#define ORLICZ_TESTS_ORACLES_HPP

// Reference values computed independently with 50-digit arithmetic
// (mpmath) from the closed-form scalar sums, before the library existed.
// Frozen: do not regenerate from library output.

namespace oracle {

// Log-power beta = 2, x_n = sum_{i=2}^n e^{i^2} f_i.
inline constexpr double kNormMuNu2 = 0.5179519701749375;
inline constexpr double kNormMuMu2 = 0.8470530569491589;
inline constexpr double kRatio2 = 1.635389197695431;
inline constexpr double kRatio10 = 2.894075510802822;
inline constexpr double kRatio10Over2 = 1.7696555137340493;
inline constexpr double kRatio10Over2Beta15 = 2.126;  // 4 digits
inline constexpr double kRatio10Over2Beta3 = 1.468;   // 4 digits

// modular_mu_mu(n), n = 2..10, beta = 2.
inline constexpr double kModularMuMu[] = {0.6944444, 1.2792398, 1.8265883,
                                          2.3567843, 2.8777128, 3.3930705,
                                          3.9048195, 4.4140977, 4.9216101};
inline constexpr double kModularMuNu5 = 0.4636111111;

// Norms for n = 2..10, beta = 2 (5 significant digits).
inline constexpr double kNormMuNu[] = {0.51795, 0.61440, 0.66201, 0.69069, 0.70990,
                                       0.72369, 0.73407, 0.74218, 0.74868};
inline constexpr double kNormMuMu[] = {0.84705, 1.12102, 1.32725, 1.50172, 1.65663,
                                       1.79782, 1.92859, 2.05107, 2.16673};

}  // namespace oracle

#endif  // ORLICZ_TESTS_ORACLES_HPP
