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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/SVD>

#include "orlicz/algebra.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/random.hpp"

using namespace orlicz;

namespace {

Matrix naive_product(const Matrix& a, const Matrix& b) {
  Matrix c = Matrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Complex sum = 0.0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

double diag(const BlockElement& x, int k, int i) { return x.block(k)(i, i).real(); }

}  // namespace

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(BlockShape(std::vector<int>{}), ShapeError);
  CHECK_THROWS_AS(BlockShape({2, 0}), ShapeError);
  CHECK_THROWS_AS(BlockShape({200, 100}), ShapeError);
  CHECK(BlockShape::commutative(3).is_commutative());
  CHECK_FALSE(BlockShape({1, 2}).is_commutative());
  CHECK(BlockShape({2, 3}).total_dimension() == 5);
}

TEST_CASE("element validation") {
  const BlockShape shape({2});
  CHECK_THROWS_AS(BlockElement(shape, {Matrix::Zero(3, 3)}), ShapeError);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = Complex(NAN, 0.0);
  CHECK_THROWS_AS(BlockElement(shape, {bad}), DomainError);
  CHECK_THROWS_AS(BlockElement(shape) + BlockElement(BlockShape({1, 1})), ShapeError);
}

TEST_CASE("arithmetic") {
  InstanceGenerator gen(11);
  const BlockShape shape({3, 3});
  const BlockElement x = gen.element(shape);
  const BlockElement y = gen.element(shape);
  CHECK((x.adjoint().adjoint() - x).frobenius_norm() == 0.0);
  CHECK((x * Complex(0.0)).is_zero());
  const BlockElement xy = x * y;
  for (int k = 0; k < 2; ++k) {
    CHECK((xy.block(k) - naive_product(x.block(k), y.block(k))).norm() <= 1e-12);
  }
  CHECK(((x + y) - y - x).frobenius_norm() <= 1e-15);
}

TEST_CASE("polar decomposition") {
  const BlockShape one({1});
  const std::vector<double> m3{-3.0};
  const PolarDecomposition p = polar(BlockElement::diagonal(one, m3));
  CHECK(p.isometry.block(0)(0, 0).real() == doctest::Approx(-1.0));
  CHECK(p.modulus.block(0)(0, 0).real() == doctest::Approx(3.0));

  const PolarDecomposition z = polar(BlockElement::zero(BlockShape({2, 1})));
  CHECK(z.isometry.is_zero());
  CHECK(z.modulus.is_zero());

  InstanceGenerator gen(5);
  const BlockElement x = gen.element(BlockShape({4}));
  const PolarDecomposition px = polar(x);
  Eigen::JacobiSVD<Matrix> svd(x.block(0));
  std::vector<double> sv(svd.singularValues().data(), svd.singularValues().data() + 4);
  const auto ev = eigenvalues(px.modulus);
  std::vector<double> got(ev[0].data(), ev[0].data() + 4);
  std::sort(sv.begin(), sv.end());
  std::sort(got.begin(), got.end());
  for (int i = 0; i < 4; ++i) CHECK(std::abs(got[i] - sv[i]) <= 1e-10);
  CHECK((x - px.isometry * px.modulus).frobenius_norm() <= 1e-10 * x.frobenius_norm());
}

TEST_CASE("polar of a rank-deficient element") {
  InstanceGenerator gen(8);
  BlockElement x = gen.element(BlockShape({3}));
  x.block(0).col(2).setZero();
  const PolarDecomposition p = polar(x);
  const BlockElement e = p.isometry.adjoint() * p.isometry;
  CHECK((e * e - e).frobenius_norm() <= 1e-12);
  CHECK(trace(TraceSpec(x.shape()), e).real() == doctest::Approx(2.0));
  CHECK((x - p.isometry * p.modulus).frobenius_norm() <= 1e-10 * x.frobenius_norm());
}

TEST_CASE("functional calculus") {
  InstanceGenerator gen(3);
  const BlockElement x = gen.hermitian(BlockShape({3, 2}));
  CHECK((func_calc([](double t) { return t; }, x) - x).frobenius_norm() <= 1e-12);
  CHECK((func_calc([](double t) { return t * t; }, x) - x * x).frobenius_norm() <= 1e-10);
  const BlockElement zero = BlockElement::zero(BlockShape({2}));
  CHECK(func_calc([](double t) { return t * t / 2; }, zero).is_zero());
  CHECK_THROWS_AS(func_calc([](double t) { return t; }, gen.element(BlockShape({3}))),
                  DomainError);
}

TEST_CASE("trace") {
  const BlockShape shape({3});
  CHECK(trace(TraceSpec(shape), BlockElement::identity(shape)).real() == doctest::Approx(3.0));
  const BlockShape comm = BlockShape::commutative(3);
  const TraceSpec nu(comm, {0.5, 2.0, 7.0});
  const std::vector<double> unit{0.0, 1.0, 0.0};
  CHECK(trace(nu, BlockElement::diagonal(comm, unit)).real() == doctest::Approx(2.0));
  InstanceGenerator gen(4);
  const BlockShape s2({3, 2});
  const TraceSpec tau(s2, {1.5, 0.25});
  const BlockElement x = gen.element(s2);
  const BlockElement y = gen.element(s2);
  CHECK(std::abs(trace(tau, x * y) - trace(tau, y * x)) <=
        1e-10 * x.frobenius_norm() * y.frobenius_norm());
  CHECK_THROWS_AS(TraceSpec(s2, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(TraceSpec(s2, {1.0}), ShapeError);
  CHECK_THROWS_AS(trace(TraceSpec(shape), x), ShapeError);
}

TEST_CASE("singular spectrum carries block weights") {
  const BlockShape shape({2, 1});
  const TraceSpec tau(shape, {3.0, 0.5});
  const std::vector<double> d{1.0, -2.0, 4.0};
  const auto spec = singular_spectrum(tau, BlockElement::diagonal(shape, d));
  REQUIRE(spec.size() == 3);
  double weighted = 0.0;
  for (const auto& [w, v] : spec) weighted += w * v;
  CHECK(weighted == doctest::Approx(3.0 * 3.0 + 0.5 * 4.0));
}

TEST_CASE("spectral truncation") {
  const BlockShape shape({3});
  const std::vector<double> d{0.1, 2.0, 3.0};
  const BlockElement x = BlockElement::diagonal(shape, d);
  const BlockElement t = spectral_truncate(x, 1.0);
  CHECK(diag(t, 0, 0) == doctest::Approx(0.0));
  CHECK(diag(t, 0, 1) == doctest::Approx(2.0));
  CHECK(diag(t, 0, 2) == doctest::Approx(3.0));
  CHECK(spectral_truncate(x, 3.0).frobenius_norm() <= 1e-15);
  CHECK((spectral_truncate(x, 1e-3) - x).frobenius_norm() <= 1e-12);
  CHECK_THROWS_AS(spectral_truncate(x, 0.0), DomainError);
  CHECK_THROWS_AS(spectral_truncate(x, -1.0), DomainError);
  const std::vector<double> neg{-1.0, 2.0, 3.0};
  CHECK_THROWS_AS(spectral_truncate(BlockElement::diagonal(shape, neg), 1.0), DomainError);
}
