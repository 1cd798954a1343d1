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
#ifndef ORLICZ_RANDOM_HPP
#define ORLICZ_RANDOM_HPP

// Random instances for the property suites. Elements have i.i.d. standard
// complex Gaussian entries; Hermitian instances are (a + a*) / 2 and positive
// instances are squares of Hermitian ones. A fixed seed gives the same stream
// on every run.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "orlicz/algebra.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/weighted.hpp"

namespace orlicz {

// Seed for instance `index` of the stream `name` under the run seed `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name, std::uint64_t index);

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  double uniform(double lo, double hi);
  // exp(uniform(log lo, log hi)).
  double log_uniform(double lo, double hi);
  int uniform_int(int lo, int hi);
  double normal();
  Complex complex_normal();

  // 1..max_blocks blocks of size 1..max_block_dim.
  BlockShape shape(int max_blocks, int max_block_dim);

  BlockElement element(const BlockShape& shape);
  BlockElement hermitian(const BlockShape& shape);
  BlockElement positive(const BlockShape& shape);
  // Haar-like unitary from the QR factor of a Gaussian matrix.
  BlockElement unitary(const BlockShape& shape);
  // Positive diagonal element with entries log-uniform in [lo, hi].
  BlockElement diagonal(const BlockShape& shape, double lo, double hi);

  // Weights log-uniform in [0.25, 4].
  TraceSpec trace(const BlockShape& shape);
  // h = V diag(e) V* with eigenvalues log-uniform in [1, max_condition]
  // times a random overall scale. Diagonal h (V = 1) when `diagonal` is set.
  WeightSpec weight(const BlockShape& shape, double alpha, double max_condition,
                    bool diagonal = false);

  // One of power 1.5, power 2, power 3, log-power 2.
  NFunction standard_phi();

 private:
  std::mt19937_64 engine_;
};

// The N-functions the property suites iterate over.
std::vector<NFunction> standard_phis();

}  // namespace orlicz

#endif  // ORLICZ_RANDOM_HPP
