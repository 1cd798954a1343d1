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
#include "orlicz/duality.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/SVD>

#include "orlicz/errors.hpp"
#include "orlicz/norms.hpp"

namespace orlicz {

namespace {

// Weighted Hilbert-Schmidt inner product sum_k w_k Re tr(a_k* b_k).
double inner(const TraceSpec& tau, const BlockElement& a, const BlockElement& b) {
  double total = 0.0;
  for (int k = 0; k < a.shape().block_count(); ++k) {
    total += tau.weight(k) * (a.block(k).adjoint() * b.block(k)).trace().real();
  }
  return total;
}

// Gradient of the modular tau(Phi(|z|)) at z: U p(S) V* per block, together
// with sum w p(s) s = <gradient, z>.
struct ModularGradient {
  BlockElement gradient;
  double radial;
};

ModularGradient modular_gradient(const NFunction& phi, const TraceSpec& tau,
                                 const BlockElement& z) {
  ModularGradient out{BlockElement(z.shape()), 0.0};
  for (int k = 0; k < z.shape().block_count(); ++k) {
    Eigen::JacobiSVD<Matrix> svd(z.block(k), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::VectorXd p = svd.singularValues();
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      const double s = p(j);
      p(j) = phi.density(s);
      out.radial += tau.weight(k) * p(j) * s;
    }
    out.gradient.block(k) =
        svd.matrixU() * p.cast<Complex>().asDiagonal() * svd.matrixV().adjoint();
  }
  return out;
}

BlockElement random_direction(const BlockShape& shape, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  BlockElement out(shape);
  for (int k = 0; k < shape.block_count(); ++k) {
    Matrix& b = out.block(k);
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      for (Eigen::Index i = 0; i < b.rows(); ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        b(i, j) = Complex(re, im);
      }
    }
  }
  return out;
}

}  // namespace

Complex pairing(const TraceSpec& tau, const BlockElement& x, const BlockElement& y) {
  return trace(tau, x * y);
}

DualNormEstimate dual_norm_diag(const NFunction& phi, const TraceSpec& tau,
                                const BlockElement& y) {
  const BlockShape& shape = y.shape();
  require_same_shape(tau.shape(), shape, "dual_norm_diag");
  if (!shape.is_commutative()) {
    throw ShapeError("dual_norm_diag: requires the commutative model");
  }
  const int n = shape.block_count();
  std::vector<double> magnitude(static_cast<std::size_t>(n));
  double largest = 0.0;
  for (int i = 0; i < n; ++i) {
    magnitude[static_cast<std::size_t>(i)] = std::abs(y.block(i)(0, 0));
    largest = std::max(largest, magnitude[static_cast<std::size_t>(i)]);
  }
  DualNormEstimate out{0.0, 0.0, BlockElement(shape), true};
  if (largest == 0.0) return out;

  const NFunction psi = phi.conjugate();
  const auto coordinate = [&](int i, double c) {
    return psi.density(magnitude[static_cast<std::size_t>(i)] / c);
  };
  const auto modular_at = [&](double c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += tau.weight(i) * phi(coordinate(i, c));
    return total;
  };

  // modular_at is nonincreasing in c; keep modular_at(lo) > 1 >= modular_at(hi).
  double hi = 1.0;
  while (modular_at(hi) > 1.0) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw NumericError("dual_norm_diag: no bracket for c");
  }
  double lo = 0.5 * hi;
  while (!(modular_at(lo) > 1.0)) {
    hi = lo;
    lo *= 0.5;
    if (lo < std::numeric_limits<double>::min()) {
      throw NumericError("dual_norm_diag: no bracket for c");
    }
  }
  for (int iter = 0; iter < 400 && hi - lo > 1e-15 * hi; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (modular_at(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  const double c = hi;
  double attained = 0.0;
  double psi_modular = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = magnitude[static_cast<std::size_t>(i)];
    if (a == 0.0) continue;
    const double xi = coordinate(i, c);
    out.witness.block(i)(0, 0) = xi * std::conj(y.block(i)(0, 0)) / a;
    attained += tau.weight(i) * xi * a;
    psi_modular += tau.weight(i) * psi(a / c);
  }
  out.lower = attained;
  out.upper = c * (1.0 + psi_modular);
  out.converged = std::abs(modular_at(c) - 1.0) <= 1e-9 &&
                  out.upper - out.lower <= 1e-8 * std::max(1.0, out.upper);
  return out;
}

DualNormEstimate dual_norm_search(const NFunction& phi, const TraceSpec& tau,
                                  const BlockElement& y, const DualSearchOptions& options) {
  require_same_shape(tau.shape(), y.shape(), "dual_norm_search");
  DualNormEstimate out{0.0, 0.0, BlockElement(y.shape()), true};
  if (y.is_zero()) return out;
  out.upper = amemiya_norm(phi.conjugate(), tau, y);

  const BlockElement y_star = y.adjoint();
  // Scale-invariant objective; every iterate is kept on the unit sphere.
  const auto normalize = [&](const BlockElement& x) {
    const double n = luxemburg_norm(phi, tau, x).value;
    return x * Complex(1.0 / n);
  };
  const auto objective = [&](const BlockElement& x) { return std::abs(pairing(tau, x, y)); };

  std::mt19937_64 rng(options.seed);
  double step_scale = 1.0 / std::sqrt(std::max(inner(tau, y_star, y_star), 1e-300));

  for (int restart = 0; restart < options.restarts; ++restart) {
    BlockElement x = normalize(restart == 0 ? y_star : random_direction(y.shape(), rng));
    double value = objective(x);
    double step = step_scale;
    for (int iter = 0; iter < options.iterations; ++iter) {
      const Complex p = pairing(tau, x, y);
      const Complex phase = std::abs(p) > 0.0 ? p / std::abs(p) : Complex(1.0);
      const ModularGradient mg = modular_gradient(phi, tau, x);
      // grad |tau(x y)| / ||x|| at ||x|| = 1.
      BlockElement direction = y_star * phase;
      if (mg.radial > 0.0) direction -= mg.gradient * Complex(value / mg.radial);
      const double size = std::sqrt(inner(tau, direction, direction));
      if (!(size > 1e-15 * (1.0 + value) / step_scale)) break;

      const BlockElement candidate = normalize(x + direction * Complex(step));
      const double candidate_value = objective(candidate);
      if (candidate_value > value) {
        x = candidate;
        value = candidate_value;
        step *= 1.5;
      } else {
        step *= 0.5;
        if (step < 1e-14 * step_scale) break;
      }
    }
    if (value > out.lower) {
      out.lower = value;
      out.witness = x;
    }
  }
  out.converged = out.lower <= out.upper * (1.0 + 1e-8);
  return out;
}

double bidual_norm_diag(const NFunction& phi, const TraceSpec& tau, const BlockElement& x) {
  require_same_shape(tau.shape(), x.shape(), "bidual_norm_diag");
  if (!x.shape().is_commutative()) {
    throw ShapeError("bidual_norm_diag: requires the commutative model");
  }
  const double norm = luxemburg_norm(phi, tau, x).value;
  if (norm == 0.0) return 0.0;
  BlockElement functional(x.shape());
  for (int i = 0; i < x.shape().block_count(); ++i) {
    const Complex xi = x.block(i)(0, 0);
    const double a = std::abs(xi);
    if (a == 0.0) continue;
    functional.block(i)(0, 0) = phi.density(a / norm) * std::conj(xi) / a;
  }
  const DualNormEstimate dual = dual_norm_diag(phi, tau, functional);
  return std::abs(pairing(tau, x, functional)) / dual.upper;
}

}  // namespace orlicz
