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
#ifndef ORLICZ_DUALITY_HPP
#define ORLICZ_DUALITY_HPP

// The functional f_y(x) = tau(x y) on the Luxemburg space of Phi and its
// norm ||f_y|| = sup{|tau(x y)| : ||x||_Phi <= 1}. Classically this equals
// the Amemiya norm of y under the complementary function Psi and lies
// between ||y||_Psi and 2 ||y||_Psi (Luxemburg).

#include <cstdint>

#include "orlicz/algebra.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

struct DualNormEstimate {
  double lower = 0.0;    // |tau(witness y)| with ||witness||_Phi <= 1
  double upper = 0.0;    // certified bound on ||f_y||
  BlockElement witness;  // norm-one element attaining `lower`
  bool converged = true;
};

Complex pairing(const TraceSpec& tau, const BlockElement& x, const BlockElement& y);

// Exact maximizer on the commutative model. The optimal x has coordinates
// x_i = q(|y_i| / c) conj(y_i) / |y_i| with c chosen so that
// sum_i nu_i Phi(x_i) = 1; the Young bound c (1 + sum_i nu_i Psi(|y_i| / c))
// is the matching upper estimate. converged is false when c cannot place the
// modular exactly at 1 (a jump in q).
DualNormEstimate dual_norm_diag(const NFunction& phi, const TraceSpec& tau,
                                const BlockElement& y);

struct DualSearchOptions {
  int restarts = 16;
  int iterations = 200;
  std::uint64_t seed = 0x5eed;
};

// Lower bound by gradient ascent of |tau(x y)| / ||x||_Phi (first start at
// y*, the rest random); upper bound is the Amemiya norm of y under Psi.
DualNormEstimate dual_norm_search(const NFunction& phi, const TraceSpec& tau,
                                  const BlockElement& y, const DualSearchOptions& options = {});

// Value of the bidual norm at a commutative x, evaluated on the norming
// functional y0 = p(|x| / ||x||_Phi) conj(sgn x): |tau(x y0)| / ||f_{y0}||.
double bidual_norm_diag(const NFunction& phi, const TraceSpec& tau, const BlockElement& x);

}  // namespace orlicz

#endif  // ORLICZ_DUALITY_HPP
