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
#include "orlicz/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

Eigen::JacobiSVD<Matrix> svd_of(const Matrix& m, bool vectors) {
  const int options = vectors ? (Eigen::ComputeFullU | Eigen::ComputeFullV) : 0;
  return Eigen::JacobiSVD<Matrix>(m, options);
}

// Symmetrized blocks of a Hermitian element; throws if x is too far from
// Hermitian.
std::vector<Matrix> hermitian_blocks(const BlockElement& x, const char* what) {
  const double scale = x.frobenius_norm();
  if (x.hermitian_defect() > kHermitianTolerance * scale) {
    throw DomainError(std::string(what) + ": element is not Hermitian");
  }
  std::vector<Matrix> out;
  out.reserve(x.blocks().size());
  for (const Matrix& b : x.blocks()) out.push_back(0.5 * (b + b.adjoint()));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockShape

BlockShape::BlockShape(std::vector<int> dims, int dimension_cap) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ShapeError("block shape: no blocks");
  for (int n : dims_) {
    if (n < 1) throw ShapeError("block shape: block sizes must be >= 1");
    total_ += n;
  }
  if (total_ > dimension_cap) {
    throw ShapeError("block shape: total dimension " + std::to_string(total_) +
                     " exceeds cap " + std::to_string(dimension_cap));
  }
}

BlockShape BlockShape::commutative(int n) {
  if (n < 1) throw ShapeError("block shape: need at least one coordinate");
  return BlockShape(std::vector<int>(static_cast<std::size_t>(n), 1));
}

bool BlockShape::is_commutative() const {
  return std::all_of(dims_.begin(), dims_.end(), [](int n) { return n == 1; });
}

void require_same_shape(const BlockShape& a, const BlockShape& b, const char* what) {
  if (!(a == b)) throw ShapeError(std::string(what) + ": shape mismatch");
}

// ---------------------------------------------------------------------------
// BlockElement

BlockElement::BlockElement(BlockShape shape) : shape_(std::move(shape)) {
  blocks_.reserve(shape_.dims().size());
  for (int n : shape_.dims()) blocks_.push_back(Matrix::Zero(n, n));
}

BlockElement::BlockElement(BlockShape shape, std::vector<Matrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != shape_.block_count()) {
    throw ShapeError("block element: block count does not match shape");
  }
  for (int k = 0; k < shape_.block_count(); ++k) {
    const Matrix& b = blocks_[static_cast<std::size_t>(k)];
    if (b.rows() != shape_.dim(k) || b.cols() != shape_.dim(k)) {
      throw ShapeError("block element: block " + std::to_string(k) +
                       " does not match its declared size");
    }
    if (!b.allFinite()) throw DomainError("block element: non-finite entry");
  }
}

BlockElement BlockElement::identity(const BlockShape& shape) {
  BlockElement out(shape);
  for (Matrix& b : out.blocks_) b.setIdentity();
  return out;
}

BlockElement BlockElement::diagonal(const BlockShape& shape, std::span<const double> entries) {
  if (static_cast<int>(entries.size()) != shape.total_dimension()) {
    throw ShapeError("diagonal element: entry count does not match total dimension");
  }
  BlockElement out(shape);
  std::size_t offset = 0;
  for (Matrix& b : out.blocks_) {
    for (Eigen::Index i = 0; i < b.rows(); ++i) b(i, i) = entries[offset++];
  }
  return out;
}

BlockElement BlockElement::adjoint() const {
  BlockElement out(shape_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) out.blocks_[k] = blocks_[k].adjoint();
  return out;
}

BlockElement& BlockElement::operator+=(const BlockElement& other) {
  require_same_shape(shape_, other.shape_, "add");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += other.blocks_[k];
  return *this;
}

BlockElement& BlockElement::operator-=(const BlockElement& other) {
  require_same_shape(shape_, other.shape_, "subtract");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= other.blocks_[k];
  return *this;
}

BlockElement& BlockElement::operator*=(Complex c) {
  for (Matrix& b : blocks_) b *= c;
  return *this;
}

BlockElement operator*(const BlockElement& a, const BlockElement& b) {
  require_same_shape(a.shape_, b.shape_, "multiply");
  BlockElement out(a.shape_);
  for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
    out.blocks_[k].noalias() = a.blocks_[k] * b.blocks_[k];
  }
  return out;
}

double BlockElement::frobenius_norm() const {
  double sq = 0.0;
  for (const Matrix& b : blocks_) sq += b.squaredNorm();
  return std::sqrt(sq);
}

double BlockElement::operator_norm() const {
  double best = 0.0;
  for (const Matrix& b : blocks_) {
    const auto sv = svd_of(b, false).singularValues();
    if (sv.size() > 0) best = std::max(best, sv(0));
  }
  return best;
}

double BlockElement::hermitian_defect() const {
  double sq = 0.0;
  for (const Matrix& b : blocks_) sq += (b - b.adjoint()).squaredNorm();
  return std::sqrt(sq);
}

bool BlockElement::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const Matrix& b) { return b.isZero(0.0); });
}

// ---------------------------------------------------------------------------
// TraceSpec

TraceSpec::TraceSpec(BlockShape shape)
    : shape_(std::move(shape)), weights_(shape_.dims().size(), 1.0) {}

TraceSpec::TraceSpec(BlockShape shape, std::vector<double> weights)
    : shape_(std::move(shape)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != shape_.block_count()) {
    throw ShapeError("trace: one weight per block required");
  }
  for (double w : weights_) {
    if (!std::isfinite(w) || !(w > 0.0)) {
      throw DomainError("trace: weights must be positive and finite");
    }
  }
}

double TraceSpec::unit_trace() const {
  double total = 0.0;
  for (int k = 0; k < shape_.block_count(); ++k) total += weight(k) * shape_.dim(k);
  return total;
}

// ---------------------------------------------------------------------------
// Spectral operations

PolarDecomposition polar(const BlockElement& x) {
  const BlockShape& shape = x.shape();
  std::vector<Eigen::JacobiSVD<Matrix>> svds;
  svds.reserve(x.blocks().size());
  double largest = 0.0;
  for (const Matrix& b : x.blocks()) {
    svds.push_back(svd_of(b, true));
    const auto& sv = svds.back().singularValues();
    if (sv.size() > 0) largest = std::max(largest, sv(0));
  }
  const double cutoff = kRankTolerance * largest;

  BlockElement u(shape);
  BlockElement modulus(shape);
  for (int k = 0; k < shape.block_count(); ++k) {
    const auto& svd = svds[static_cast<std::size_t>(k)];
    const Matrix& left = svd.matrixU();
    const Matrix& right = svd.matrixV();
    const Eigen::VectorXd& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && largest > 0.0 && sv(rank) > cutoff) ++rank;
    u.block(k) = left.leftCols(rank) * right.leftCols(rank).adjoint();
    modulus.block(k) = right.leftCols(rank) * sv.head(rank).cast<Complex>().asDiagonal() *
                       right.leftCols(rank).adjoint();
  }
  return {std::move(u), std::move(modulus)};
}

BlockElement func_calc(const std::function<double(double)>& f, const BlockElement& x) {
  std::vector<Matrix> blocks = hermitian_blocks(x, "func_calc");
  for (Matrix& b : blocks) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(b);
    Eigen::VectorXd values = eig.eigenvalues();
    for (Eigen::Index i = 0; i < values.size(); ++i) values(i) = f(values(i));
    b = eig.eigenvectors() * values.cast<Complex>().asDiagonal() *
        eig.eigenvectors().adjoint();
  }
  return BlockElement(x.shape(), std::move(blocks));
}

std::vector<Eigen::VectorXd> eigenvalues(const BlockElement& x) {
  std::vector<Eigen::VectorXd> out;
  for (const Matrix& b : hermitian_blocks(x, "eigenvalues")) {
    out.push_back(Eigen::SelfAdjointEigenSolver<Matrix>(b, Eigen::EigenvaluesOnly).eigenvalues());
  }
  return out;
}

std::vector<Eigen::VectorXd> singular_values(const BlockElement& x) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(x.blocks().size());
  for (const Matrix& b : x.blocks()) out.push_back(svd_of(b, false).singularValues());
  return out;
}

std::vector<WeightedValue> singular_spectrum(const TraceSpec& tau, const BlockElement& x) {
  require_same_shape(tau.shape(), x.shape(), "singular_spectrum");
  std::vector<WeightedValue> out;
  out.reserve(static_cast<std::size_t>(x.shape().total_dimension()));
  const auto sv = singular_values(x);
  for (int k = 0; k < x.shape().block_count(); ++k) {
    for (double s : sv[static_cast<std::size_t>(k)]) out.push_back({tau.weight(k), s});
  }
  return out;
}

Complex trace(const TraceSpec& tau, const BlockElement& x) {
  require_same_shape(tau.shape(), x.shape(), "trace");
  Complex total = 0.0;
  for (int k = 0; k < x.shape().block_count(); ++k) total += tau.weight(k) * x.block(k).trace();
  return total;
}

BlockElement spectral_truncate(const BlockElement& x, double lambda) {
  if (!std::isfinite(lambda) || !(lambda > 0.0)) {
    throw DomainError("spectral_truncate: lambda must be positive");
  }
  std::vector<Matrix> blocks = hermitian_blocks(x, "spectral_truncate");
  std::vector<Eigen::SelfAdjointEigenSolver<Matrix>> eigs;
  double largest = 0.0;
  for (const Matrix& b : blocks) {
    eigs.emplace_back(b);
    const auto& v = eigs.back().eigenvalues();
    largest = std::max({largest, std::abs(v.minCoeff()), std::abs(v.maxCoeff())});
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    Eigen::VectorXd values = eigs[k].eigenvalues();
    if (values.minCoeff() < -kHermitianTolerance * largest) {
      throw DomainError("spectral_truncate: element is not positive");
    }
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      if (values(i) <= lambda || values(i) <= kRankTolerance * largest) values(i) = 0.0;
    }
    blocks[k] = eigs[k].eigenvectors() * values.cast<Complex>().asDiagonal() *
                eigs[k].eigenvectors().adjoint();
  }
  return BlockElement(x.shape(), std::move(blocks));
}

}  // namespace orlicz
