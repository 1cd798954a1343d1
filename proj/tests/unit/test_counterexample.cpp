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

#include "oracles.hpp"
#include "orlicz/counterexample.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/weighted.hpp"

using namespace orlicz;

TEST_CASE("construction") {
  const ExampleData d = build_example(2.0, 10);
  CHECK(d.records.size() == 10);
  CHECK(d.at(2).f.log_magnitude() == doctest::Approx(4.0));
  CHECK(d.at(2).h.log_magnitude() == doctest::Approx(8.0 + std::log(5.0)).epsilon(1e-15));
  CHECK(d.at(2).nu.log_magnitude() ==
        doctest::Approx(-std::log(4.0) - 16.0 - std::log(9.0)).epsilon(1e-15));
  CHECK(d.at(1).x.is_zero());
  CHECK(d.at(3).x.log_magnitude() == doctest::Approx(9.0));
  CHECK(d.at(10).nu.log_magnitude() < -200.0);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(build_example(1.0, 5), DomainError);
  CHECK_THROWS_AS(build_example(0.5, 5), DomainError);
  CHECK_THROWS_AS(build_example(NAN, 5), DomainError);
  CHECK_THROWS_AS(build_example(2.0, 1), DomainError);
  CHECK_THROWS_AS(build_example(2.0, kExampleMaxN + 1), DomainError);
  const ExampleData d = build_example(2.0, 4);
  CHECK_THROWS_AS(modular_mu_nu(d, 5), DomainError);
  CHECK_THROWS_AS(modular_mu_mu(d, 1), DomainError);
}

TEST_CASE("log-domain phi") {
  for (double t : {0.3, 1.0, 7.5}) {
    CHECK(log_power_phi(2.0, LogScalar::from_double(t)).to_double() ==
          doctest::Approx(NFunction::log_power(2.0)(t)).epsilon(1e-14));
  }
  CHECK(log_power_phi(2.0, LogScalar()).is_zero());
}

TEST_CASE("modular terms") {
  const ExampleData d = build_example(2.0, 10);
  for (int n = 2; n <= 10; ++n) {
    double mu_mu = 0.0;
    for (int i = 2; i <= n; ++i) {
      const double s = static_cast<double>(i) * i;
      mu_mu += (s + 1.0) * (s + 1.0) / (s * (2.0 * s + 1.0));
    }
    CHECK(modular_mu_nu(d, n) == doctest::Approx(inverse_square_sum(n)).epsilon(1e-12));
    CHECK(modular_mu_mu(d, n) == doctest::Approx(mu_mu).epsilon(1e-12));
    CHECK(modular_mu_mu(d, n) >= 0.5 * (n - 1) - 1e-12);
    CHECK(modular_mu_mu(d, n) == doctest::Approx(oracle::kModularMuMu[n - 2]).epsilon(1e-7));
  }
  CHECK(modular_mu_nu(d, 5) == doctest::Approx(oracle::kModularMuNu5).epsilon(1e-10));
  CHECK(harmonic_lower_bound(4) == doctest::Approx(0.5 + 1.0 / 3.0 + 0.25));
}

TEST_CASE("norms and ratio") {
  const ExampleData d = build_example(2.0, 10);
  CHECK(norm_mu_nu(d, 2).value == doctest::Approx(oracle::kNormMuNu2).epsilon(1e-10));
  CHECK(norm_mu_mu(d, 2).value == doctest::Approx(oracle::kNormMuMu2).epsilon(1e-10));
  CHECK(norm_ratio(d, 2) == doctest::Approx(oracle::kRatio2).epsilon(1e-10));
  CHECK(norm_ratio(d, 10) == doctest::Approx(oracle::kRatio10).epsilon(1e-10));
  CHECK(norm_ratio(d, 10) / norm_ratio(d, 2) ==
        doctest::Approx(oracle::kRatio10Over2).epsilon(1e-10));
  for (int n = 2; n <= 10; ++n) {
    CHECK(norm_mu_nu(d, n).value == doctest::Approx(oracle::kNormMuNu[n - 2]).epsilon(1e-5));
    CHECK(norm_mu_mu(d, n).value == doctest::Approx(oracle::kNormMuMu[n - 2]).epsilon(1e-5));
    CHECK(std::abs(modular_mu_nu(d, n, norm_mu_nu(d, n).value) - 1.0) <= 1e-9);
  }
  const ExampleData d15 = build_example(1.5, 10);
  CHECK(norm_ratio(d15, 10) / norm_ratio(d15, 2) ==
        doctest::Approx(oracle::kRatio10Over2Beta15).epsilon(1e-3));
  const ExampleData d3 = build_example(3.0, 10);
  CHECK(norm_ratio(d3, 10) / norm_ratio(d3, 2) ==
        doctest::Approx(oracle::kRatio10Over2Beta3).epsilon(1e-3));
}

TEST_CASE("modulars at lambda = 1 do not depend on beta") {
  const ExampleData a = build_example(2.0, 10);
  const ExampleData b = build_example(3.0, 10);
  for (int n = 2; n <= 10; ++n) {
    CHECK(modular_mu_nu(a, n) == doctest::Approx(modular_mu_nu(b, n)).epsilon(1e-12));
    CHECK(modular_mu_mu(a, n) == doctest::Approx(modular_mu_mu(b, n)).epsilon(1e-12));
  }
}

TEST_CASE("table rows") {
  const ExampleData d = build_example(2.0, 6);
  const auto rows = counterexample_table(d);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().n == 2);
  CHECK(rows.back().n == 6);
  for (const auto& r : rows) {
    CHECK(r.ratio == doctest::Approx(r.norm_mu_mu / r.norm_mu_nu));
    CHECK(r.modular_mu_mu >= r.modular_mu_mu_lower - 1e-12);
  }
  CHECK(counterexample_notes().size() >= 2);
}

TEST_CASE("log-domain values agree with the matrix pipeline") {
  const double beta = 1.1;
  const int n = 3;
  const ExampleData d = build_example(beta, n);
  const NFunction phi = NFunction::log_power(beta);
  const BlockShape c = BlockShape::commutative(n);
  std::vector<double> h, nu, nu_h, x;
  for (int i = 1; i <= n; ++i) {
    h.push_back(d.at(i).h.to_double());
    nu.push_back(d.at(i).nu.to_double());
    nu_h.push_back((d.at(i).nu * d.at(i).h).to_double());
    x.push_back(d.at(i).x.to_double());
  }
  const BlockElement xe = BlockElement::diagonal(c, x);
  const WeightSpec w(BlockElement::diagonal(c, h), 1.0);
  const double via_matrix = weighted_modular(phi, w, TraceSpec(c, nu), xe).value;
  CHECK(via_matrix == doctest::Approx(modular_mu_nu(d, n)).epsilon(1e-9));
  const double mu_mu_matrix = modular(phi, TraceSpec(c, nu_h), xe).value;
  CHECK(mu_mu_matrix == doctest::Approx(modular_mu_mu(d, n)).epsilon(1e-9));
  CHECK(weighted_norm(phi, w, TraceSpec(c, nu), xe).value ==
        doctest::Approx(norm_mu_nu(d, n).value).epsilon(1e-9));
}
