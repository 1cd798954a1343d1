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
#include <stdexcept>

#include "orlicz/proptest.hpp"

using namespace orlicz;

TEST_CASE("registry") {
  const auto& all = proptest::suites();
  CHECK(all.size() >= 30);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const auto& a, const auto& b) { return a.name < b.name; }));
  CHECK(proptest::find_suite("triangle") != nullptr);
  CHECK(proptest::find_suite("no_such_suite") == nullptr);
}

TEST_CASE("selection and determinism") {
  proptest::RunConfig cfg;
  cfg.seed = 11;
  cfg.count = 5;
  cfg.only = {"triangle", "homogeneity"};
  const auto a = proptest::run(cfg);
  REQUIRE(a.size() == 2);
  CHECK(a[0].name == "homogeneity");
  CHECK(a[1].name == "triangle");
  CHECK(a[0].instances == 5);
  CHECK(a[0].passed);
  cfg.parallel = false;
  const auto b = proptest::run(cfg);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(proptest::to_json(a[k]).dump() == proptest::to_json(b[k]).dump());
  }
  cfg.only = {"bogus"};
  CHECK_THROWS_AS(proptest::run(cfg), std::invalid_argument);
}

TEST_CASE("a forced failure is reported and replays exactly") {
  proptest::RunConfig cfg;
  cfg.seed = 3;
  cfg.count = 4;
  cfg.tol_scale = 0.0;
  cfg.only = {"u_inverse_roundtrip"};
  const auto first = proptest::run(cfg);
  REQUIRE(first.size() == 1);
  CHECK_FALSE(first[0].passed);
  REQUIRE(first[0].failure.has_value());
  const auto& f = *first[0].failure;
  CHECK(f.at("seed") == 3);
  CHECK(f.contains("instance"));
  CHECK(f.contains("data"));
  CHECK(first[0].worst_slack < 0.0);
  const auto again = proptest::run(cfg);
  CHECK(proptest::to_json(again[0]).dump() == proptest::to_json(first[0]).dump());
}

TEST_CASE("instance streams do not depend on the count") {
  proptest::RunConfig small;
  small.seed = 5;
  small.count = 2;
  small.tol_scale = 0.0;
  small.only = {"u_inverse_roundtrip"};
  proptest::RunConfig large = small;
  large.count = 6;
  const auto a = proptest::run(small);
  const auto b = proptest::run(large);
  REQUIRE(a[0].failure.has_value());
  REQUIRE(b[0].failure.has_value());
  CHECK(a[0].failure->dump() == b[0].failure->dump());
}
