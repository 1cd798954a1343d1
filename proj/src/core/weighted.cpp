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
#include "orlicz/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightSpec

WeightSpec::WeightSpec(BlockElement h, double alpha, double condition_cap)
    : h_(std::move(h)), alpha_(alpha), condition_(1.0) {
  require_alpha(alpha_);
  if (h_.hermitian_defect() > kHermitianTolerance * h_.frobenius_norm()) {
    throw DomainError("weight: h must be Hermitian");
  }
  double smallest = std::numeric_limits<double>::infinity();
  double largest = 0.0;
  for (const Matrix& b : h_.blocks()) {
    const Matrix sym = 0.5 * (b + b.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
    eigenvalues_.push_back(eig.eigenvalues());
    eigenvectors_.push_back(eig.eigenvectors());
    smallest = std::min(smallest, eig.eigenvalues().minCoeff());
    largest = std::max(largest, eig.eigenvalues().maxCoeff());
  }
  if (!(largest > 0.0) || !(smallest > 1e-12 * largest)) {
    throw DomainError("weight: h must be positive definite (nonsingular)");
  }
  condition_ = largest / smallest;
  if (condition_ > condition_cap) {
    throw DomainError("weight: condition number of h exceeds the cap");
  }
}

WeightSpec WeightSpec::with_alpha(double alpha) const {
  require_alpha(alpha);
  WeightSpec copy = *this;
  copy.alpha_ = alpha;
  return copy;
}

BlockElement WeightSpec::spectral_function(const std::function<double(double)>& f) const {
  std::vector<Eigen::VectorXd> values = eigenvalues_;
  for (Eigen::VectorXd& v : values) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = f(v(i));
  }
  return with_eigenvalues(values);
}

BlockElement WeightSpec::with_eigenvalues(const std::vector<Eigen::VectorXd>& values) const {
  std::vector<Matrix> blocks;
  blocks.reserve(eigenvalues_.size());
  for (std::size_t k = 0; k < eigenvalues_.size(); ++k) {
    blocks.push_back(eigenvectors_[k] * values[k].cast<Complex>().asDiagonal() *
                     eigenvectors_[k].adjoint());
  }
  return BlockElement(h_.shape(), std::move(blocks));
}

double weight_value(const WeightSpec& weight, const TraceSpec& tau, const BlockElement& x) {
  require_same_shape(weight.shape(), x.shape(), "weight_value");
  return std::max(0.0, trace(tau, weight.density() * x).real());
}

// ---------------------------------------------------------------------------
// WeightTransform

WeightTransform::WeightTransform(const NFunction& phi, const WeightSpec& weight)
    : g_(weight.shape()),
      left_(weight.shape()),
      right_(weight.shape()),
      left_inverse_(weight.shape()),
      right_inverse_(weight.shape()) {
  // g shares the eigenbasis of h; its eigenvalues are Phi^{-1}(eigenvalues).
  std::vector<Eigen::VectorXd> g_values = weight.eigenvalues();
  for (Eigen::VectorXd& v : g_values) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = phi.inverse(v(i));
  }
  g_ = weight.with_eigenvalues(g_values);
  const double a = weight.alpha();
  const auto power = [&](double e) {
    std::vector<Eigen::VectorXd> values = g_values;
    for (Eigen::VectorXd& v : values) v = v.array().pow(e).matrix();
    return weight.with_eigenvalues(values);
  };
  left_ = power(a);
  right_ = power(1.0 - a);
  left_inverse_ = power(-a);
  right_inverse_ = power(a - 1.0);
}

BlockElement WeightTransform::apply(const BlockElement& x) const {
  return left_ * x * right_;
}

BlockElement WeightTransform::invert(const BlockElement& y) const {
  return left_inverse_ * y * right_inverse_;
}

double WeightTransform::left_factor_norm() const { return left_.operator_norm(); }
double WeightTransform::right_factor_norm() const { return right_.operator_norm(); }

// ---------------------------------------------------------------------------
// WeightedSpace

WeightedSpace::WeightedSpace(NFunction phi, WeightSpec weight, TraceSpec tau)
    : phi_(std::move(phi)),
      weight_(std::move(weight)),
      tau_(std::move(tau)),
      transform_(phi_, weight_) {
  require_same_shape(weight_.shape(), tau_.shape(), "weighted space");
}

ModularValue WeightedSpace::modular(const BlockElement& x) const {
  return orlicz::modular(phi_, tau_, u_map(x));
}

NormResult WeightedSpace::norm(const BlockElement& x) const {
  require_same_shape(tau_.shape(), x.shape(), "weighted norm");
  const double size = x.operator_norm();
  if (size == 0.0) return {};
  const double hint = transform_.left_factor_norm() * size * transform_.right_factor_norm() /
                      phi_.inverse(1.0 / tau_.unit_trace());
  return minkowski_functional(
      [&](double lambda) { return modular(x * Complex(1.0 / lambda)); }, hint);
}

double WeightedSpace::lemma1_gap(const BlockElement& x, double lambda) const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lemma1_gap: lambda must lie in [0, 1]");
  }
  return lambda * modular(x).value - modular(x * Complex(lambda)).value;
}

// ---------------------------------------------------------------------------
// Free-function forms

BlockElement u_map(const NFunction& phi, const WeightSpec& weight, const BlockElement& x) {
  require_same_shape(weight.shape(), x.shape(), "u_map");
  return WeightTransform(phi, weight).apply(x);
}

BlockElement u_inverse(const NFunction& phi, const WeightSpec& weight, const BlockElement& y) {
  require_same_shape(weight.shape(), y.shape(), "u_inverse");
  return WeightTransform(phi, weight).invert(y);
}

ModularValue weighted_modular(const NFunction& phi, const WeightSpec& weight,
                              const TraceSpec& tau, const BlockElement& x) {
  return WeightedSpace(phi, weight, tau).modular(x);
}

NormResult weighted_norm(const NFunction& phi, const WeightSpec& weight, const TraceSpec& tau,
                         const BlockElement& x) {
  return WeightedSpace(phi, weight, tau).norm(x);
}

double lemma1_gap(const NFunction& phi, const WeightSpec& weight, const TraceSpec& tau,
                  const BlockElement& x, double lambda) {
  return WeightedSpace(phi, weight, tau).lemma1_gap(x, lambda);
}

double trunov_lp_norm(const TraceSpec& tau, const BlockElement& h, const BlockElement& x,
                      double p, double alpha) {
  if (!std::isfinite(p) || p < 1.0) throw DomainError("trunov_lp_norm: p must be >= 1");
  require_alpha(alpha);
  require_same_shape(h.shape(), x.shape(), "trunov_lp_norm");
  // Validates nonsingularity and Hermitian structure of h.
  const WeightSpec checked(h, alpha);
  (void)checked;
  const BlockElement left = func_calc([&](double v) { return std::pow(v, alpha / p); }, h);
  const BlockElement right =
      func_calc([&](double v) { return std::pow(v, (1.0 - alpha) / p); }, h);
  return lp_norm(tau, left * x * right, p);
}

}  // namespace orlicz
