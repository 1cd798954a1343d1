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
#ifndef ORLICZ_WEIGHTED_HPP
#define ORLICZ_WEIGHTED_HPP

// Orlicz spaces of a weight phi = tau(h .) relative to the trace tau.
//
// The map U(x) = g^alpha x g^{1-alpha} with g = Phi^{-1}(h) carries the
// weighted space isometrically onto the ordinary Orlicz space of tau, and the
// weighted modular is O(x) = tau(Phi(|U(x)|)).

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "orlicz/algebra.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/norms.hpp"

namespace orlicz {

class WeightSpec {
 public:
  static constexpr double kDefaultConditionCap = 1e8;

  // h must be Hermitian with smallest eigenvalue > 1e-12 * largest, and
  // largest / smallest <= condition_cap.
  WeightSpec(BlockElement h, double alpha, double condition_cap = kDefaultConditionCap);

  const BlockElement& density() const { return h_; }
  double alpha() const { return alpha_; }
  double condition_bound() const { return condition_; }
  const BlockShape& shape() const { return h_.shape(); }

  WeightSpec with_alpha(double alpha) const;

  // V f(Lambda) V* in the cached eigenbasis of h.
  BlockElement spectral_function(const std::function<double(double)>& f) const;
  // Same eigenbasis, eigenvalues replaced per block by `values`.
  BlockElement with_eigenvalues(const std::vector<Eigen::VectorXd>& values) const;

  const std::vector<Eigen::VectorXd>& eigenvalues() const { return eigenvalues_; }

 private:
  BlockElement h_;
  double alpha_;
  double condition_;
  std::vector<Eigen::VectorXd> eigenvalues_;
  std::vector<Matrix> eigenvectors_;
};

// phi(x) = tau(h x) for positive x.
double weight_value(const WeightSpec& weight, const TraceSpec& tau, const BlockElement& x);

// U and U^{-1} for a fixed N-function and weight. The factors g^alpha,
// g^{1-alpha} and their inverses are computed once.
class WeightTransform {
 public:
  WeightTransform(const NFunction& phi, const WeightSpec& weight);

  BlockElement apply(const BlockElement& x) const;
  BlockElement invert(const BlockElement& y) const;

  // g = Phi^{-1}(h).
  const BlockElement& g() const { return g_; }
  double left_factor_norm() const;
  double right_factor_norm() const;

 private:
  BlockElement g_;
  BlockElement left_;
  BlockElement right_;
  BlockElement left_inverse_;
  BlockElement right_inverse_;
};

// Weighted Orlicz space L_{Phi,alpha}(M, phi, tau) on the finite model.
class WeightedSpace {
 public:
  WeightedSpace(NFunction phi, WeightSpec weight, TraceSpec tau);

  const NFunction& phi() const { return phi_; }
  const WeightSpec& weight() const { return weight_; }
  const TraceSpec& trace_spec() const { return tau_; }
  const WeightTransform& transform() const { return transform_; }

  BlockElement u_map(const BlockElement& x) const { return transform_.apply(x); }
  BlockElement u_inverse(const BlockElement& y) const { return transform_.invert(y); }

  ModularValue modular(const BlockElement& x) const;
  // Minkowski functional of {x : O(x) <= 1}, bisecting directly on
  // lambda -> O(x / lambda).
  NormResult norm(const BlockElement& x) const;
  // lambda O(x) - O(lambda x), nonnegative for lambda in [0, 1].
  double lemma1_gap(const BlockElement& x, double lambda) const;

 private:
  NFunction phi_;
  WeightSpec weight_;
  TraceSpec tau_;
  WeightTransform transform_;
};

BlockElement u_map(const NFunction& phi, const WeightSpec& weight, const BlockElement& x);
BlockElement u_inverse(const NFunction& phi, const WeightSpec& weight, const BlockElement& y);
ModularValue weighted_modular(const NFunction& phi, const WeightSpec& weight,
                              const TraceSpec& tau, const BlockElement& x);
NormResult weighted_norm(const NFunction& phi, const WeightSpec& weight, const TraceSpec& tau,
                         const BlockElement& x);
double lemma1_gap(const NFunction& phi, const WeightSpec& weight, const TraceSpec& tau,
                  const BlockElement& x, double lambda);

// ||h^{alpha/p} x h^{(1-alpha)/p}||_p, the L_p norm of the weight phi.
double trunov_lp_norm(const TraceSpec& tau, const BlockElement& h, const BlockElement& x,
                      double p, double alpha);

}  // namespace orlicz

#endif  // ORLICZ_WEIGHTED_HPP
