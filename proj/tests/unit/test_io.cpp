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

#include "orlicz/errors.hpp"
#include "orlicz/io.hpp"

using namespace orlicz;

TEST_CASE("N-function records") {
  const NFunction p = io::nfunction_from_json(io::parse(R"({"kind":"power","p":3})"));
  CHECK(p(2.0) == doctest::Approx(8.0 / 3.0));
  const NFunction lp = io::nfunction_from_json(io::parse(R"({"kind":"logpower","beta":2})"));
  CHECK(lp(std::exp(1.0)) == doctest::Approx(2.0 * std::exp(2.0)));
  const NFunction t =
      io::nfunction_from_json(io::parse(R"({"kind":"table","points":[[1,2],[3,2],[4,6]]})"));
  CHECK(t(4.0) == doctest::Approx(9.0));
  const NFunction c =
      io::nfunction_from_json(io::parse(R"({"kind":"conjugate","of":{"kind":"power","p":2}})"));
  CHECK(c(3.0) == doctest::Approx(4.5).epsilon(1e-9));
  for (const NFunction& f : {p, lp, t}) {
    const NFunction back = io::nfunction_from_json(io::to_json(f));
    CHECK(back(1.7) == doctest::Approx(f(1.7)).epsilon(1e-14));
  }
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(io::parse("{"), ParseError);
  CHECK_THROWS_AS(io::nfunction_from_json(io::parse(R"({"kind":"cubic"})")), ParseError);
  CHECK_THROWS_AS(io::nfunction_from_json(io::parse(R"({"p":2})")), ParseError);
  CHECK_THROWS_AS(io::nfunction_from_json(io::parse(R"({"kind":"power","p":"x"})")), ParseError);
  CHECK_THROWS_AS(io::nfunction_from_json(io::parse(R"({"kind":"power","p":1})")), DomainError);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"({"dims":[2]})")), ParseError);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"({"dims":[],"blocks":[]})")), ParseError);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"({"dims":[2],"blocks":[[1,2,3]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"({"dims":[2],"blocks":[[[1,2],[3]]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"({"dims":[1.5],"blocks":[[1]]})")),
                  ParseError);
}

TEST_CASE("element records") {
  const BlockElement x =
      io::element_from_json(io::parse(R"({"dims":[2,1],"blocks":[[[1,0],[0,2],[3,0],[4,-1]],[[5,0]]]})"));
  CHECK(x.shape() == BlockShape({2, 1}));
  CHECK(x.block(0)(0, 1) == Complex(0.0, 2.0));
  CHECK(x.block(0)(1, 1) == Complex(4.0, -1.0));
  CHECK(x.block(1)(0, 0) == Complex(5.0));
  const BlockElement rows = io::element_from_json(io::parse(R"({"dims":[2],"blocks":[[[1,2],[3,4]]]})"));
  CHECK(rows.block(0)(1, 0) == Complex(3.0));
  const BlockElement back = io::element_from_json(io::to_json(x));
  CHECK((back - x).frobenius_norm() == 0.0);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"({"dims":[300],"blocks":[[]]})")), ShapeError);
}

TEST_CASE("trace and weight records") {
  const BlockShape s({2, 1});
  CHECK(io::trace_from_json(io::parse("{}"), s).weights() == std::vector<double>{1.0, 1.0});
  CHECK(io::trace_from_json(io::parse(R"({"weights":[2,3]})"), s).weight(1) == 3.0);
  CHECK_THROWS_AS(io::trace_from_json(io::parse(R"({"weights":[2]})"), s), ShapeError);
  CHECK_THROWS_AS(io::trace_from_json(io::parse(R"({"weights":"x"})"), s), ParseError);
  const auto w_text = R"({"h":{"dims":[2],"blocks":[[2,0,0,3]]},"alpha":0.25})";
  const WeightSpec w = io::weight_from_json(io::parse(w_text));
  CHECK(w.alpha() == 0.25);
  CHECK(io::weight_from_json(io::parse(w_text), 0.75).alpha() == 0.75);
  CHECK(io::weight_from_json(io::to_json(w)).condition_bound() == doctest::Approx(1.5));
  CHECK_THROWS_AS(io::weight_from_json(io::parse(R"({"alpha":0.5})")), ParseError);
}
