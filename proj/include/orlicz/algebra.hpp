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
#ifndef ORLICZ_ALGEBRA_HPP
#define ORLICZ_ALGEBRA_HPP

// Finite model of a semi-finite von Neumann algebra: M = M_{n_1} + ... +
// M_{n_K} (direct sum of full matrix blocks) with the faithful normal trace
// tau(x) = sum_k w_k tr(x_k). All-1x1 blocks give the commutative algebra of
// sequences with coordinate weights nu_i.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace orlicz {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

class BlockShape {
 public:
  static constexpr int kDefaultDimensionCap = 256;

  explicit BlockShape(std::vector<int> dims, int dimension_cap = kDefaultDimensionCap);

  // n one-dimensional blocks.
  static BlockShape commutative(int n);

  const std::vector<int>& dims() const { return dims_; }
  int block_count() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const { return dims_[static_cast<std::size_t>(k)]; }
  int total_dimension() const { return total_; }
  bool is_commutative() const;

  bool operator==(const BlockShape&) const = default;

 private:
  std::vector<int> dims_;
  int total_ = 0;
};

class BlockElement {
 public:
  // Zero element.
  explicit BlockElement(BlockShape shape);
  BlockElement(BlockShape shape, std::vector<Matrix> blocks);

  static BlockElement zero(const BlockShape& shape) { return BlockElement(shape); }
  static BlockElement identity(const BlockShape& shape);
  // Block-diagonal element with the given entries along the full diagonal
  // (length = total dimension).
  static BlockElement diagonal(const BlockShape& shape, std::span<const double> entries);

  const BlockShape& shape() const { return shape_; }
  const Matrix& block(int k) const { return blocks_[static_cast<std::size_t>(k)]; }
  Matrix& block(int k) { return blocks_[static_cast<std::size_t>(k)]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  BlockElement adjoint() const;

  BlockElement& operator+=(const BlockElement& other);
  BlockElement& operator-=(const BlockElement& other);
  BlockElement& operator*=(Complex c);

  friend BlockElement operator+(BlockElement a, const BlockElement& b) { return a += b; }
  friend BlockElement operator-(BlockElement a, const BlockElement& b) { return a -= b; }
  friend BlockElement operator*(BlockElement a, Complex c) { return a *= c; }
  friend BlockElement operator*(Complex c, BlockElement a) { return a *= c; }
  friend BlockElement operator*(const BlockElement& a, const BlockElement& b);

  double frobenius_norm() const;
  // Largest singular value over all blocks.
  double operator_norm() const;
  // ||x - x*||_F.
  double hermitian_defect() const;
  bool is_zero() const;

 private:
  BlockShape shape_;
  std::vector<Matrix> blocks_;
};

// Per-block positive weights w_k. In commutative mode these are the
// coordinate weights nu_i.
class TraceSpec {
 public:
  // Standard trace, all weights 1.
  explicit TraceSpec(BlockShape shape);
  TraceSpec(BlockShape shape, std::vector<double> weights);

  const BlockShape& shape() const { return shape_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(int k) const { return weights_[static_cast<std::size_t>(k)]; }
  // tau(1).
  double unit_trace() const;

 private:
  BlockShape shape_;
  std::vector<double> weights_;
};

struct PolarDecomposition {
  BlockElement isometry;  // u, partial isometry with u*u = support of |x|
  BlockElement modulus;   // |x| = (x*x)^{1/2}
};

// A singular value together with the trace weight of its block.
struct WeightedValue {
  double weight;
  double value;
};

// Singular values below this fraction of the largest are exact zeros for
// support projections and truncation.
inline constexpr double kRankTolerance = 1e-14;
// Allowed ||x - x*||_F / ||x||_F for input to Hermitian functional calculus.
inline constexpr double kHermitianTolerance = 1e-10;

void require_same_shape(const BlockShape& a, const BlockShape& b, const char* what);

PolarDecomposition polar(const BlockElement& x);

// V f(Lambda) V* per block. Rejects x that is not Hermitian within
// kHermitianTolerance; symmetrizes otherwise.
BlockElement func_calc(const std::function<double(double)>& f, const BlockElement& x);

// Per-block eigenvalues (ascending) of a Hermitian element.
std::vector<Eigen::VectorXd> eigenvalues(const BlockElement& x);

// Per-block singular values (descending).
std::vector<Eigen::VectorXd> singular_values(const BlockElement& x);

// Weighted singular values, the data every unitarily invariant quantity in
// this library is computed from.
std::vector<WeightedValue> singular_spectrum(const TraceSpec& tau, const BlockElement& x);

Complex trace(const TraceSpec& tau, const BlockElement& x);

// x (1 - e_lambda(x)): eigenvalues <= lambda are set to zero.
BlockElement spectral_truncate(const BlockElement& x, double lambda);

}  // namespace orlicz

#endif  // ORLICZ_ALGEBRA_HPP
