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
#ifndef ORLICZ_PROPTEST_HPP
#define ORLICZ_PROPTEST_HPP

// Randomized invariant suites.
//
// Every instance draws from its own generator seeded by
// derive_seed(run seed, suite name, instance index), so a failure reported as
// (seed, suite, instance) replays bit-exactly with --seed and --only, and
// filtering or reordering suites never changes any stream.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace orlicz::proptest {

using Json = nlohmann::json;

struct SuiteResult {
  std::string name;
  int instances = 0;
  long checks = 0;
  bool passed = true;
  // min over checks of (allowed - observed); negative on failure.
  double worst_slack = 0.0;
  // First violation: seed, instance index, observed/allowed, instance data.
  std::optional<Json> failure;
  // Informational values that are not pass/fail criteria.
  Json info = Json::object();
  double seconds = 0.0;
};

struct SuiteParams {
  std::uint64_t seed = 1;
  int count = 0;  // instances; 0 selects the suite default
  double tol_scale = 1.0;
};

struct Suite {
  std::string name;
  std::string description;
  int default_count;
  std::function<SuiteResult(const SuiteParams&)> run;
};

// All registered suites, sorted by name.
const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

struct RunConfig {
  std::uint64_t seed = 1;
  int count = 0;
  double tol_scale = 1.0;
  std::vector<std::string> only;  // empty: all suites
  bool parallel = true;
};

// Runs the selected suites (concurrently when parallel) and returns results
// sorted by suite name. Throws std::invalid_argument for an unknown name.
std::vector<SuiteResult> run(const RunConfig& config);

// Deterministic record (no timing).
Json to_json(const SuiteResult& r);

}  // namespace orlicz::proptest

#endif  // ORLICZ_PROPTEST_HPP
