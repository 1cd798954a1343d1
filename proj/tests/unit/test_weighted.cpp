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

#include <cmath>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/random.hpp"
#include "orlicz/weighted.hpp"

using namespace orlicz;

TEST_CASE("weight validation") {
  const BlockShape s2({2});
  const std::vector<double> ok{1.0, 2.0};
  const std::vector<double> singular{1.0, 0.0};
  const std::vector<double> wide{1.0, 1e9};
  CHECK_NOTHROW(WeightSpec(BlockElement::diagonal(s2, ok), 0.5));
  CHECK_THROWS_AS(WeightSpec(BlockElement::diagonal(s2, singular), 0.5), DomainError);
  CHECK_THROWS_AS(WeightSpec(BlockElement::diagonal(s2, wide), 0.5), DomainError);
  CHECK_THROWS_AS(WeightSpec(BlockElement::diagonal(s2, ok), 1.5), DomainError);
  CHECK_THROWS_AS(WeightSpec(BlockElement::diagonal(s2, ok), -0.1), DomainError);
  InstanceGenerator gen(1);
  CHECK_THROWS_AS(WeightSpec(gen.element(s2), 0.5), DomainError);
  CHECK(WeightSpec(BlockElement::diagonal(s2, ok), 0.0).condition_bound() ==
        doctest::Approx(2.0));
}

TEST_CASE("weight value") {
  InstanceGenerator gen(2);
  const BlockShape s({3, 1});
  const TraceSpec tau(s, {2.0, 0.5});
  const BlockElement x = gen.positive(s);
  const WeightSpec unit(BlockElement::identity(s), 0.3);
  CHECK(weight_value(unit, tau, x) == doctest::Approx(trace(tau, x).real()));
  CHECK(weight_value(unit, tau, BlockElement::zero(s)) == 0.0);
  const BlockShape c = BlockShape::commutative(3);
  const std::vector<double> h{2.0, 3.0, 5.0};
  const std::vector<double> f2{0.0, 1.0, 0.0};
  const TraceSpec nu(c, {0.1, 0.2, 0.3});
  CHECK(weight_value(WeightSpec(BlockElement::diagonal(c, h), 1.0), nu,
                     BlockElement::diagonal(c, f2)) == doctest::Approx(0.2 * 3.0));
}

TEST_CASE("U with h = 1 under phi_2 is multiplication by sqrt 2") {
  InstanceGenerator gen(3);
  const BlockShape s({2, 2});
  const NFunction phi = NFunction::power(2.0);
  const BlockElement x = gen.element(s);
  for (double alpha : {0.0, 0.4, 1.0}) {
    const WeightSpec w(BlockElement::identity(s), alpha);
    CHECK((u_map(phi, w, x) - x * Complex(std::sqrt(2.0))).frobenius_norm() <= 1e-13);
    CHECK((u_inverse(phi, w, x) - x * Complex(1.0 / std::sqrt(2.0))).frobenius_norm() <= 1e-13);
    CHECK(u_map(phi, w, BlockElement::zero(s)).is_zero());
    CHECK(u_inverse(phi, w, BlockElement::zero(s)).is_zero());
  }
}

TEST_CASE("U in the commutative model multiplies by Phi^{-1}(h)") {
  const NFunction phi = NFunction::log_power(2.0);
  const BlockShape c = BlockShape::commutative(2);
  // h_i = Phi(e^{i^2}) for i = 1, 2 with beta = 2
  const std::vector<double> h{phi(std::exp(1.0)), phi(std::exp(4.0))};
  const std::vector<double> x{0.5, -1.5};
  const BlockElement u = u_map(phi, WeightSpec(BlockElement::diagonal(c, h), 1.0),
                               BlockElement::diagonal(c, x));
  CHECK(u.block(0)(0, 0).real() == doctest::Approx(0.5 * std::exp(1.0)).epsilon(1e-12));
  CHECK(u.block(1)(0, 0).real() == doctest::Approx(-1.5 * std::exp(4.0)).epsilon(1e-12));
}

TEST_CASE("weighted modular") {
  const NFunction phi2 = NFunction::power(2.0);
  const BlockShape s1({1});
  const TraceSpec tau(s1, {3.0});
  const WeightSpec unit(BlockElement::identity(s1), 0.5);
  CHECK(weighted_modular(phi2, unit, tau, BlockElement::zero(s1)).value == 0.0);
  CHECK(weighted_modular(phi2, unit, tau, BlockElement::identity(s1)).value ==
        doctest::Approx(3.0).epsilon(1e-14));
  // commutative, alpha = 1: sum nu_i Phi(g_i x_i)
  const BlockShape c = BlockShape::commutative(3);
  const NFunction phi = NFunction::log_power(2.0);
  const std::vector<double> h{0.7, 4.0, 30.0};
  const std::vector<double> nu{0.5, 1.0, 2.0};
  const std::vector<double> x{0.3, -0.2, 0.9};
  double expected = 0.0;
  for (int i = 0; i < 3; ++i) expected += nu[i] * phi(phi.inverse(h[i]) * x[i]);
  CHECK(weighted_modular(phi, WeightSpec(BlockElement::diagonal(c, h), 1.0), TraceSpec(c, nu),
                         BlockElement::diagonal(c, x))
            .value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("weighted norm") {
  InstanceGenerator gen(4);
  const BlockShape s({3, 2});
  const TraceSpec tau = gen.trace(s);
  const NFunction phi = NFunction::log_power(2.0);
  const WeightSpec w = gen.weight(s, 0.3, 1e3);
  CHECK(weighted_norm(phi, w, tau, BlockElement::zero(s)).value == 0.0);
  const BlockElement x = gen.element(s);
  const WeightedSpace space(phi, w, tau);
  const NormResult r = space.norm(x);
  CHECK(std::abs(r.modular_at_norm - 1.0) <= 1e-9);
  CHECK(std::abs(r.value - luxemburg_norm(phi, tau, space.u_map(x)).value) <= 1e-10 * r.value);
}

TEST_CASE("weighted Lp norm") {
  InstanceGenerator gen(5);
  const BlockShape s({3});
  const TraceSpec tau(s);
  const BlockElement x = gen.element(s);
  CHECK(trunov_lp_norm(tau, BlockElement::identity(s), x, 2.5, 0.3) ==
        doctest::Approx(lp_norm(tau, x, 2.5)).epsilon(1e-12));
  const BlockShape two({2});
  const std::vector<double> h{4.0, 1.0};
  const std::vector<double> ones{1.0, 1.0};
  CHECK(trunov_lp_norm(TraceSpec(two), BlockElement::diagonal(two, h),
                       BlockElement::diagonal(two, ones), 2.0, 1.0) ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
  const std::vector<double> hd{0.5, 3.0, 9.0};
  const std::vector<double> xd{1.0, -2.0, 0.5};
  const BlockElement hh = BlockElement::diagonal(s, hd);
  const BlockElement xx = BlockElement::diagonal(s, xd);
  CHECK(trunov_lp_norm(tau, hh, xx, 3.0, 0.0) ==
        doctest::Approx(trunov_lp_norm(tau, hh, xx, 3.0, 1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(trunov_lp_norm(tau, hh, xx, 0.5, 0.0), DomainError);
  for (double p : {1.5, 2.0, 3.0}) {
    const WeightSpec w = gen.weight(s, 0.6, 1e3);
    CHECK(weighted_norm(NFunction::power(p), w, tau, x).value ==
          doctest::Approx(trunov_lp_norm(tau, w.density(), x, p, 0.6)).epsilon(1e-9));
  }
}

TEST_CASE("scaling gap lambda O(x) - O(lambda x)") {
  InstanceGenerator gen(6);
  const BlockShape s({2, 2});
  const TraceSpec tau = gen.trace(s);
  const WeightSpec w = gen.weight(s, 0.5, 1e2);
  const BlockElement x = gen.element(s);
  const NFunction phi2 = NFunction::power(2.0);
  CHECK(lemma1_gap(phi2, w, tau, x, 1.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(lemma1_gap(phi2, w, tau, x, 0.0) == 0.0);
  const double o = weighted_modular(phi2, w, tau, x).value;
  CHECK(lemma1_gap(phi2, w, tau, x, 0.5) == doctest::Approx(0.25 * o).epsilon(1e-12));
  CHECK_THROWS_AS(lemma1_gap(phi2, w, tau, x, 1.5), DomainError);
}
