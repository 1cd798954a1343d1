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
#ifndef ORLICZ_IO_HPP
#define ORLICZ_IO_HPP

// Text records.
//
//   N-function  {"kind":"power","p":2.0} | {"kind":"logpower","beta":2.0}
//               | {"kind":"table","points":[[s,p],...]}
//               | {"kind":"conjugate","of":<N-function>}
//   element     {"dims":[2,3],"blocks":[[[re,im],...],...]}   (row-major; an
//               entry may also be a bare real, a block may also be a list
//               of rows)
//   trace       {"weights":[w1,...]}                         (absent: all 1)
//   weight      {"h":<element>,"alpha":0.5}

#include <optional>
#include <string_view>

#include <json.hpp>

#include "orlicz/algebra.hpp"
#include "orlicz/duality.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/weighted.hpp"

namespace orlicz::io {

using Json = nlohmann::json;

// Parses text, mapping syntax errors to ParseError.
Json parse(std::string_view text);

NFunction nfunction_from_json(const Json& j);
Json to_json(const NFunction& phi);

BlockElement element_from_json(const Json& j,
                               int dimension_cap = BlockShape::kDefaultDimensionCap);
Json to_json(const BlockElement& x);

TraceSpec trace_from_json(const Json& j, const BlockShape& shape);
Json to_json(const TraceSpec& tau);

WeightSpec weight_from_json(const Json& j, std::optional<double> alpha_override = std::nullopt);
Json to_json(const WeightSpec& w);

Json to_json(const NormResult& r);

}  // namespace orlicz::io

#endif  // ORLICZ_IO_HPP
