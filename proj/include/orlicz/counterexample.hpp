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
#ifndef ORLICZ_COUNTEREXAMPLE_HPP
#define ORLICZ_COUNTEREXAMPLE_HPP

// Two traces on l_inf whose weighted Orlicz norms are not equivalent.
//
// With Phi(t) = t^beta (ln t + 1), f_i = e^{i^2}, h_i = Phi(f_i),
// nu_i = 1 / (i^2 e^{2 beta i^2} (2 i^2 + 1)) and mu = nu(h .), the elements
// x_n = sum_{i=2}^n e^{i^2} (unit_i) satisfy
//   O^{mu,nu}(x_n) = sum_{i=2}^n 1/i^2 < 1,
//   O^{mu,mu}(x_n) > sum_{i=2}^n 1/i -> infinity.
// The magnitudes involved overflow doubles from i = 4 on, so everything here
// is evaluated with LogScalar.

#include <string>
#include <vector>

#include "orlicz/log_scalar.hpp"
#include "orlicz/norms.hpp"

namespace orlicz {

struct ExampleRecord {
  int index;       // i >= 1
  LogScalar nu;    // nu(unit_i)
  LogScalar h;     // Phi(f_i)
  LogScalar f;     // e^{i^2}
  LogScalar x;     // i-th coordinate of x_n for any n >= i (zero at i = 1)
};

struct ExampleData {
  double beta;
  int n_max;
  std::vector<ExampleRecord> records;  // records[i - 1] describes index i

  const ExampleRecord& at(int i) const { return records[static_cast<std::size_t>(i - 1)]; }
};

inline constexpr int kExampleMaxN = 64;

// beta > 1, 2 <= n_max <= 64.
ExampleData build_example(double beta, int n_max);

// Phi(t) for the log-power function, in the log domain.
LogScalar log_power_phi(double beta, const LogScalar& t);

// O^{mu,nu}(x_n / lambda) = sum_i nu_i Phi(f_i (x_n)_i / lambda).
double modular_mu_nu(const ExampleData& data, int n, double lambda = 1.0);
// O^{mu,mu}(x_n / lambda) = sum_i nu_i h_i Phi((x_n)_i / lambda).
double modular_mu_mu(const ExampleData& data, int n, double lambda = 1.0);
// The same modulars for an arbitrary sequence given coordinatewise (index 1
// first), used to reconcile with the matrix pipeline.
double modular_mu_nu_at(const ExampleData& data, const std::vector<LogScalar>& x);
double modular_mu_mu_at(const ExampleData& data, const std::vector<LogScalar>& x);

// sum_{i=2}^n 1/i.
double harmonic_lower_bound(int n);
// sum_{i=2}^n 1/i^2.
double inverse_square_sum(int n);

NormResult norm_mu_nu(const ExampleData& data, int n);
NormResult norm_mu_mu(const ExampleData& data, int n);
// norm_mu_mu / norm_mu_nu.
double norm_ratio(const ExampleData& data, int n);

struct CounterexampleRow {
  int n;
  double modular_mu_nu;
  double modular_mu_mu;
  double modular_mu_mu_lower;
  double norm_mu_nu;
  double norm_mu_mu;
  double ratio;
};

std::vector<CounterexampleRow> counterexample_table(const ExampleData& data);

// Identities behind the table, as plain text.
std::vector<std::string> counterexample_notes();

}  // namespace orlicz

#endif  // ORLICZ_COUNTEREXAMPLE_HPP
