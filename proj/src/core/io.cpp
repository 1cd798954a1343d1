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
#include "orlicz/io.hpp"

#include <string>
#include <variant>

#include "orlicz/errors.hpp"

namespace orlicz::io {

namespace {

const Json& field(const Json& j, const char* name, const char* record) {
  if (!j.is_object()) throw ParseError(std::string(record) + ": expected an object");
  const auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string(record) + ": missing \"" + name + "\" field");
  }
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

bool is_entry(const Json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

Complex entry(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (is_entry(j)) return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("element: entries must be a number or [re, im]");
}

Matrix block_from_json(const Json& j, int n, int k) {
  const std::string where = "element: block " + std::to_string(k);
  if (!j.is_array()) throw ParseError(where + " must be an array");
  const auto size = static_cast<std::size_t>(n);
  Matrix m(n, n);
  if (j.size() == size * size && (n != 1 || is_entry(j[0]))) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m(r, c) = entry(j[static_cast<std::size_t>(r * n + c)]);
    }
    return m;
  }
  if (j.size() == size) {
    for (int r = 0; r < n; ++r) {
      const Json& row = j[static_cast<std::size_t>(r)];
      if (!row.is_array() || row.size() != size) throw ParseError(where + ": ragged row");
      for (int c = 0; c < n; ++c) m(r, c) = entry(row[static_cast<std::size_t>(c)]);
    }
    return m;
  }
  throw ParseError(where + ": expected " + std::to_string(n * n) + " entries");
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
}

NFunction nfunction_from_json(const Json& j) {
  const Json& kind_field = field(j, "kind", "N-function");
  if (!kind_field.is_string()) throw ParseError("N-function: \"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();
  if (kind == "power") return NFunction::power(number(field(j, "p", "N-function"), "p"));
  if (kind == "logpower") {
    return NFunction::log_power(number(field(j, "beta", "N-function"), "beta"));
  }
  if (kind == "table") {
    const Json& pts = field(j, "points", "N-function");
    if (!pts.is_array()) throw ParseError("N-function: \"points\" must be an array");
    std::vector<TableDensity::Point> points;
    for (const Json& p : pts) {
      if (!p.is_array() || p.size() != 2) throw ParseError("N-function: points are [s, p] pairs");
      points.emplace_back(number(p[0], "s"), number(p[1], "p"));
    }
    return NFunction::table(std::move(points));
  }
  if (kind == "conjugate") return nfunction_from_json(field(j, "of", "N-function")).conjugate();
  throw ParseError("N-function: unknown kind \"" + kind + "\"");
}

namespace {

Json density_to_json(const DensityFunction& d) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowerDensity>) {
          return {{"kind", "power"}, {"p", v.exponent}};
        } else if constexpr (std::is_same_v<T, LogPowerDensity>) {
          return {{"kind", "logpower"}, {"beta", v.beta}};
        } else if constexpr (std::is_same_v<T, TableDensity>) {
          Json pts = Json::array();
          for (const auto& [s, p] : v.points()) pts.push_back({s, p});
          return {{"kind", "table"}, {"points", pts}};
        } else {
          return {{"kind", "conjugate"}, {"of", density_to_json(*v.base)}};
        }
      },
      d.variant());
}

}  // namespace

Json to_json(const NFunction& phi) { return density_to_json(phi.density_function()); }

BlockElement element_from_json(const Json& j, int dimension_cap) {
  const Json& dims_field = field(j, "dims", "element");
  if (!dims_field.is_array() || dims_field.empty()) {
    throw ParseError("element: \"dims\" must be a nonempty array");
  }
  std::vector<int> dims;
  for (const Json& d : dims_field) {
    if (!d.is_number_integer()) throw ParseError("element: dims must be integers");
    dims.push_back(d.get<int>());
  }
  const Json& blocks_field = field(j, "blocks", "element");
  if (!blocks_field.is_array() || blocks_field.size() != dims.size()) {
    throw ParseError("element: \"blocks\" must hold one block per entry of \"dims\"");
  }
  BlockShape shape(dims, dimension_cap);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    blocks.push_back(block_from_json(blocks_field[k], dims[k], static_cast<int>(k)));
  }
  return BlockElement(std::move(shape), std::move(blocks));
}

Json to_json(const BlockElement& x) {
  Json blocks = Json::array();
  for (const Matrix& b : x.blocks()) {
    Json flat = Json::array();
    for (Eigen::Index r = 0; r < b.rows(); ++r) {
      for (Eigen::Index c = 0; c < b.cols(); ++c) flat.push_back({b(r, c).real(), b(r, c).imag()});
    }
    blocks.push_back(std::move(flat));
  }
  return {{"dims", x.shape().dims()}, {"blocks", std::move(blocks)}};
}

TraceSpec trace_from_json(const Json& j, const BlockShape& shape) {
  if (!j.is_object()) throw ParseError("trace: expected an object");
  const auto it = j.find("weights");
  if (it == j.end()) return TraceSpec(shape);
  if (!it->is_array()) throw ParseError("trace: \"weights\" must be an array");
  std::vector<double> weights;
  for (const Json& w : *it) weights.push_back(number(w, "trace weight"));
  return TraceSpec(shape, std::move(weights));
}

Json to_json(const TraceSpec& tau) { return {{"weights", tau.weights()}}; }

WeightSpec weight_from_json(const Json& j, std::optional<double> alpha_override) {
  BlockElement h = element_from_json(field(j, "h", "weight"));
  double alpha = 0.0;
  if (alpha_override) {
    alpha = *alpha_override;
  } else {
    alpha = number(field(j, "alpha", "weight"), "alpha");
  }
  return WeightSpec(std::move(h), alpha);
}

Json to_json(const WeightSpec& w) { return {{"h", to_json(w.density())}, {"alpha", w.alpha()}}; }

Json to_json(const NormResult& r) {
  return {{"norm", r.value}, {"modular_at_norm", r.modular_at_norm}, {"iterations", r.iterations}};
}

}  // namespace orlicz::io
