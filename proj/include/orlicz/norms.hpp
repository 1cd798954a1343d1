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
#ifndef ORLICZ_NORMS_HPP
#define ORLICZ_NORMS_HPP

#include <functional>
#include <span>

#include "orlicz/algebra.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

// tau(Phi(|x|)). Overflow is flagged rather than saturated.
struct ModularValue {
  double value = 0.0;
  bool overflow = false;
};

struct NormResult {
  double value = 0.0;
  // Modular of x / value; 1 up to the bisection width whenever value > 0.
  double modular_at_norm = 0.0;
  int iterations = 0;
};

// Relative bracket width at which norm bisection stops.
inline constexpr double kNormRelativeWidth = 1e-12;

ModularValue modular(const NFunction& phi, const TraceSpec& tau, const BlockElement& x);

// sum_j w_j Phi(s_j / lambda).
ModularValue spectrum_modular(const NFunction& phi, std::span<const WeightedValue> spectrum,
                              double lambda = 1.0);

// inf{lambda > 0 : modular_at(lambda) <= 1} for a modular_at that is
// continuous and strictly decreasing in lambda. hint is any positive starting
// scale; the bracket is grown or shrunk from it by doubling.
NormResult minkowski_functional(const std::function<ModularValue(double)>& modular_at,
                                double hint);

// Luxemburg norm inf{lambda > 0 : tau(Phi(|x| / lambda)) <= 1}.
NormResult luxemburg_norm(const NFunction& phi, const TraceSpec& tau, const BlockElement& x);

// (tau(|x|^p))^{1/p}, p >= 1.
double lp_norm(const TraceSpec& tau, const BlockElement& x, double p);

// Amemiya (Orlicz) norm inf_{k > 0} (1 + tau(Phi(k |x|))) / k, by
// golden-section search over log k. Lies in [||x||_Phi, 2 ||x||_Phi].
double amemiya_norm(const NFunction& phi, const TraceSpec& tau, const BlockElement& x);

}  // namespace orlicz

#endif  // ORLICZ_NORMS_HPP
