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
#include "orlicz/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace orlicz {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  // FNV-1a over the name, then splitmix64 over the combination.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = seed ^ h ^ (index * 0x9e3779b97f4a7c15ULL);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double InstanceGenerator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double InstanceGenerator::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

int InstanceGenerator::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

double InstanceGenerator::normal() { return std::normal_distribution<double>()(engine_); }

Complex InstanceGenerator::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

BlockShape InstanceGenerator::shape(int max_blocks, int max_block_dim) {
  const int blocks = uniform_int(1, max_blocks);
  std::vector<int> dims;
  for (int k = 0; k < blocks; ++k) dims.push_back(uniform_int(1, max_block_dim));
  return BlockShape(std::move(dims));
}

BlockElement InstanceGenerator::element(const BlockShape& shape) {
  BlockElement out(shape);
  for (int k = 0; k < shape.block_count(); ++k) {
    Matrix& b = out.block(k);
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      for (Eigen::Index i = 0; i < b.rows(); ++i) b(i, j) = complex_normal();
    }
  }
  return out;
}

BlockElement InstanceGenerator::hermitian(const BlockShape& shape) {
  const BlockElement a = element(shape);
  return (a + a.adjoint()) * Complex(0.5);
}

BlockElement InstanceGenerator::positive(const BlockShape& shape) {
  const BlockElement a = hermitian(shape);
  return a * a;
}

BlockElement InstanceGenerator::unitary(const BlockShape& shape) {
  BlockElement out = element(shape);
  for (int k = 0; k < shape.block_count(); ++k) {
    Eigen::HouseholderQR<Matrix> qr(out.block(k));
    Matrix q = qr.householderQ();
    out.block(k) = q;
  }
  return out;
}

BlockElement InstanceGenerator::diagonal(const BlockShape& shape, double lo, double hi) {
  std::vector<double> entries;
  for (int i = 0; i < shape.total_dimension(); ++i) entries.push_back(log_uniform(lo, hi));
  return BlockElement::diagonal(shape, entries);
}

TraceSpec InstanceGenerator::trace(const BlockShape& shape) {
  std::vector<double> weights;
  for (int k = 0; k < shape.block_count(); ++k) weights.push_back(log_uniform(0.25, 4.0));
  return TraceSpec(shape, std::move(weights));
}

WeightSpec InstanceGenerator::weight(const BlockShape& shape, double alpha, double max_condition,
                                     bool diagonal) {
  const double scale = log_uniform(0.1, 10.0);
  std::vector<double> eigen;
  for (int i = 0; i < shape.total_dimension(); ++i) {
    eigen.push_back(scale * log_uniform(1.0, max_condition));
  }
  BlockElement h = BlockElement::diagonal(shape, eigen);
  if (!diagonal) {
    const BlockElement v = unitary(shape);
    h = v * h * v.adjoint();
    h = (h + h.adjoint()) * Complex(0.5);
  }
  return WeightSpec(std::move(h), alpha);
}

NFunction InstanceGenerator::standard_phi() {
  static const std::vector<NFunction> phis = standard_phis();
  return phis[static_cast<std::size_t>(uniform_int(0, static_cast<int>(phis.size()) - 1))];
}

std::vector<NFunction> standard_phis() {
  return {NFunction::power(1.5), NFunction::power(2.0), NFunction::power(3.0),
          NFunction::log_power(2.0)};
}

}  // namespace orlicz
