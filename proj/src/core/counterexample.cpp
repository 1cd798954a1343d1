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
#include "orlicz/counterexample.hpp"

#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

void require_index(const ExampleData& data, int n) {
  if (n < 2 || n > data.n_max) {
    throw DomainError("counterexample: n must lie in [2, n_max]");
  }
}

}  // namespace

LogScalar log_power_phi(double beta, const LogScalar& t) {
  if (t.is_zero()) return {};
  const double log_t = t.log_magnitude();
  const LogScalar magnitude = t.sign() < 0 ? -t : t;
  if (log_t < 0.0) return magnitude.pow(beta);
  return magnitude.pow(beta) * LogScalar::from_double(log_t + 1.0);
}

ExampleData build_example(double beta, int n_max) {
  if (!std::isfinite(beta) || !(beta > 1.0)) {
    throw DomainError("counterexample: beta must exceed 1");
  }
  if (n_max < 2 || n_max > kExampleMaxN) {
    throw DomainError("counterexample: n_max must lie in [2, 64]");
  }
  ExampleData data{beta, n_max, {}};
  data.records.reserve(static_cast<std::size_t>(n_max));
  for (int i = 1; i <= n_max; ++i) {
    const double sq = static_cast<double>(i) * i;
    ExampleRecord r;
    r.index = i;
    r.f = LogScalar::from_log(sq);
    r.h = log_power_phi(beta, r.f);
    r.nu = (LogScalar::from_log(2.0 * beta * sq) * LogScalar::from_double(sq * (2.0 * sq + 1.0)))
               .reciprocal();
    r.x = i >= 2 ? LogScalar::from_log(sq) : LogScalar();
    data.records.push_back(r);
  }
  return data;
}

double modular_mu_nu_at(const ExampleData& data, const std::vector<LogScalar>& x) {
  if (x.size() > data.records.size()) throw ShapeError("counterexample: sequence too long");
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const ExampleRecord& r = data.records[k];
    total += (r.nu * log_power_phi(data.beta, r.f * x[k])).to_double();
  }
  return total;
}

double modular_mu_mu_at(const ExampleData& data, const std::vector<LogScalar>& x) {
  if (x.size() > data.records.size()) throw ShapeError("counterexample: sequence too long");
  // The weight of mu relative to itself is 1 and Phi^{-1}(1) = 1, so U is the
  // identity here.
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const ExampleRecord& r = data.records[k];
    total += (r.nu * r.h * log_power_phi(data.beta, x[k])).to_double();
  }
  return total;
}

namespace {

std::vector<LogScalar> scaled_x(const ExampleData& data, int n, double lambda) {
  const LogScalar inv = LogScalar::from_double(lambda).reciprocal();
  std::vector<LogScalar> x;
  x.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) x.push_back(data.at(i).x * inv);
  return x;
}

}  // namespace

double modular_mu_nu(const ExampleData& data, int n, double lambda) {
  require_index(data, n);
  return modular_mu_nu_at(data, scaled_x(data, n, lambda));
}

double modular_mu_mu(const ExampleData& data, int n, double lambda) {
  require_index(data, n);
  return modular_mu_mu_at(data, scaled_x(data, n, lambda));
}

double harmonic_lower_bound(int n) {
  double total = 0.0;
  for (int i = 2; i <= n; ++i) total += 1.0 / i;
  return total;
}

double inverse_square_sum(int n) {
  double total = 0.0;
  for (int i = 2; i <= n; ++i) total += 1.0 / (static_cast<double>(i) * i);
  return total;
}

NormResult norm_mu_nu(const ExampleData& data, int n) {
  require_index(data, n);
  return minkowski_functional(
      [&](double lambda) {
        const double m = modular_mu_nu(data, n, lambda);
        return ModularValue{m, !std::isfinite(m)};
      },
      1.0);
}

NormResult norm_mu_mu(const ExampleData& data, int n) {
  require_index(data, n);
  return minkowski_functional(
      [&](double lambda) {
        const double m = modular_mu_mu(data, n, lambda);
        return ModularValue{m, !std::isfinite(m)};
      },
      1.0);
}

double norm_ratio(const ExampleData& data, int n) {
  return norm_mu_mu(data, n).value / norm_mu_nu(data, n).value;
}

std::vector<CounterexampleRow> counterexample_table(const ExampleData& data) {
  std::vector<CounterexampleRow> rows;
  for (int n = 2; n <= data.n_max; ++n) {
    CounterexampleRow row{};
    row.n = n;
    row.modular_mu_nu = modular_mu_nu(data, n);
    row.modular_mu_mu = modular_mu_mu(data, n);
    row.modular_mu_mu_lower = harmonic_lower_bound(n);
    row.norm_mu_nu = norm_mu_nu(data, n).value;
    row.norm_mu_mu = norm_mu_mu(data, n).value;
    row.ratio = row.norm_mu_mu / row.norm_mu_nu;
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::string> counterexample_notes() {
  return {
      "h_i = Phi(e^{i^2}) = e^{beta i^2} (i^2 + 1), so that Phi^{-1}(h_i) = e^{i^2}",
      "O^{mu,mu}(x_n) >= sum_{i=2}^n 1/i, which grows without bound while "
      "O^{mu,nu}(x_n) = sum_{i=2}^n 1/i^2 stays below 1",
  };
}

}  // namespace orlicz
