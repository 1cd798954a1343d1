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

#include "orlicz/random.hpp"

using namespace orlicz;

TEST_CASE("derived seeds") {
  CHECK(derive_seed(1, "triangle", 0) == derive_seed(1, "triangle", 0));
  CHECK(derive_seed(1, "triangle", 0) != derive_seed(1, "triangle", 1));
  CHECK(derive_seed(1, "triangle", 0) != derive_seed(2, "triangle", 0));
  CHECK(derive_seed(1, "triangle", 0) != derive_seed(1, "isometry", 0));
}

TEST_CASE("generators replay") {
  InstanceGenerator a(42), b(42);
  const BlockShape sa = a.shape(3, 4);
  const BlockShape sb = b.shape(3, 4);
  REQUIRE(sa == sb);
  CHECK((a.element(sa) - b.element(sb)).frobenius_norm() == 0.0);
  CHECK(a.trace(sa).weights() == b.trace(sb).weights());
  CHECK(a.standard_phi().name() == b.standard_phi().name());
}

TEST_CASE("generated objects have the advertised structure") {
  InstanceGenerator g(7);
  for (int k = 0; k < 20; ++k) {
    const BlockShape s = g.shape(3, 4);
    CHECK(s.block_count() <= 3);
    CHECK(g.hermitian(s).hermitian_defect() <= 1e-14);
    const BlockElement u = g.unitary(s);
    CHECK((u.adjoint() * u - BlockElement::identity(s)).frobenius_norm() <= 1e-12);
    for (const auto& ev : eigenvalues(g.positive(s))) CHECK(ev.minCoeff() > 0.0);
    const WeightSpec w = g.weight(s, 0.5, 100.0);
    CHECK(w.condition_bound() <= 100.0 * (1.0 + 1e-9));
    const TraceSpec tau = g.trace(s);
    for (double t : tau.weights()) {
      CHECK(t >= 0.25);
      CHECK(t <= 4.0);
    }
  }
  CHECK(standard_phis().size() == 4);
}
