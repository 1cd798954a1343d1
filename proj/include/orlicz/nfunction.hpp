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
#ifndef ORLICZ_NFUNCTION_HPP
#define ORLICZ_NFUNCTION_HPP

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace orlicz {

class DensityFunction;

// p(s) = s^(exponent-1), so that Phi(t) = |t|^exponent / exponent.
struct PowerDensity {
  double exponent;
};

// Phi(t) = t^beta (ln t + 1) for t >= 1 and t^beta below 1. The two pieces
// meet at Phi(1) = 1; the density jumps from beta to beta + 1 there.
struct LogPowerDensity {
  double beta;
};

// Generalized inverse q(s) = sup{t >= 0 : p(t) <= s} of another density,
// evaluated by bisection. This is the density of the complementary function.
struct InverseDensity {
  std::shared_ptr<const DensityFunction> base;
};

// Piecewise-linear density through breakpoints (s_j, p_j) starting at (0, 0),
// extrapolated linearly past the last breakpoint.
//
// Abscissae are nondecreasing. A repeated abscissa encodes a jump and the
// density is right-continuous there; user tables (from_points) must have
// strictly increasing abscissae, jumps only arise from conjugating plateaus.
class TableDensity {
 public:
  using Point = std::pair<double, double>;

  // Validates a user table. A missing leading (0, 0) breakpoint is inserted.
  static TableDensity from_points(std::vector<Point> points);

  double density(double s) const;
  double primitive(double t) const;

  // Reflection of the graph in the diagonal: plateaus become jumps and jumps
  // become plateaus, the sup convention is kept by right-continuity.
  TableDensity swapped() const;

  std::vector<Point> points() const;

 private:
  TableDensity(std::vector<double> s, std::vector<double> p);

  std::vector<double> s_;
  std::vector<double> p_;
  std::vector<double> cumulative_;
};

enum class DensityKind { power, log_power, table, inverse };

// Right-continuous nondecreasing density p with p(0) = 0, p(s) > 0 for
// s > 0 and p(s) -> infinity.
class DensityFunction {
 public:
  using Variant =
      std::variant<PowerDensity, LogPowerDensity, TableDensity, InverseDensity>;

  static DensityFunction power(double exponent);
  static DensityFunction log_power(double beta);
  static DensityFunction table(std::vector<TableDensity::Point> points);

  DensityKind kind() const;
  const Variant& variant() const { return repr_; }

  // p(s) for s >= 0.
  double operator()(double s) const;
  // Integral of p over [0, t] for t >= 0.
  double primitive(double t) const;

  DensityFunction generalized_inverse() const;

 private:
  explicit DensityFunction(Variant repr) : repr_(std::move(repr)) {}

  Variant repr_;
};

struct Delta2Estimate {
  bool satisfied;
  double r_estimate;
};

// An N-function Phi(t) = integral of p over [0, |t|]. Immutable; the
// complementary density is built once at construction.
class NFunction {
 public:
  explicit NFunction(DensityFunction density, std::string name = {});

  static NFunction power(double exponent);
  static NFunction log_power(double beta);
  static NFunction table(std::vector<TableDensity::Point> points);

  // Phi(|t|).
  double operator()(double t) const;
  // p(s).
  double density(double s) const;
  // The unique t >= 0 with Phi(t) = y.
  double inverse(double y) const;
  // Complementary N-function Psi with density q = generalized inverse of p.
  NFunction conjugate() const;
  // Phi(t) + Psi(s) - t s, nonnegative by Young's inequality.
  double young_gap(double t, double s) const;

  const DensityFunction& density_function() const { return *density_; }
  const std::string& name() const { return name_; }

 private:
  std::shared_ptr<const DensityFunction> density_;
  std::shared_ptr<const DensityFunction> conjugate_density_;
  std::string name_;
};

// Heuristic (delta_2, Delta_2) check: r_estimate is the largest sampled
// Phi(k t) / Phi(t); the flag is set when the top decade of the grid shows no
// growth over the decade below it (max ratio within 5%). Finitely many samples
// cannot prove the condition, so the flag is advisory.
Delta2Estimate check_delta2(const NFunction& phi, double k,
                            std::span<const double> grid);

// points_per_decade log-spaced points per decade over [lo, hi], inclusive.
std::vector<double> log_grid(double lo, double hi, int points_per_decade);

}  // namespace orlicz

#endif  // ORLICZ_NFUNCTION_HPP
