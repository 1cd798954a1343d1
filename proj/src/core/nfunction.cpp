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
#include "orlicz/nfunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxRefineIterations = 200;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// sup{t >= 0 : p(t) <= s} for a nondecreasing p with p(0) = 0 and p > 0 on
// (0, inf). Bisection keeps p(lo) <= s < p(hi).
double sup_sublevel(const DensityFunction& p, double s) {
  if (!(s > 0.0)) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  if (p(hi) <= s) {
    while (p(hi) <= s) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) {
        throw NumericError("generalized inverse: no upper bracket found");
      }
    }
  } else {
    lo = 0.5;
    while (p(lo) > s) {
      hi = lo;
      lo *= 0.5;
      if (lo < std::numeric_limits<double>::min()) return 0.0;
    }
  }
  // Beyond the cap the bracket is already at adjacent doubles.
  for (int iter = 0; iter < 2 * kMaxRefineIterations; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (p(mid) <= s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::string describe(const DensityFunction& d) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const PowerDensity& v) { out << "power(" << v.exponent << ")"; },
                 [&](const LogPowerDensity& v) { out << "logpower(" << v.beta << ")"; },
                 [&](const TableDensity& v) { out << "table[" << v.points().size() << "]"; },
                 [&](const InverseDensity& v) { out << "conjugate(" << describe(*v.base) << ")"; },
             },
             d.variant());
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// TableDensity

TableDensity::TableDensity(std::vector<double> s, std::vector<double> p)
    : s_(std::move(s)), p_(std::move(p)), cumulative_(s_.size(), 0.0) {
  for (std::size_t j = 1; j < s_.size(); ++j) {
    cumulative_[j] =
        cumulative_[j - 1] + 0.5 * (s_[j] - s_[j - 1]) * (p_[j] + p_[j - 1]);
  }
}

TableDensity TableDensity::from_points(std::vector<Point> points) {
  for (const auto& [s, p] : points) {
    if (!std::isfinite(s) || !std::isfinite(p)) {
      throw DomainError("table density: non-finite breakpoint");
    }
  }
  if (points.empty()) throw DomainError("table density: no breakpoints");
  if (points.front().first < 0.0) {
    throw DomainError("table density: negative abscissa");
  }
  if (points.front().first > 0.0) {
    points.insert(points.begin(), Point{0.0, 0.0});
  } else if (points.front().second != 0.0) {
    throw DomainError("table density: p(0) must be 0");
  }
  if (points.size() < 2) {
    throw DomainError("table density: need a breakpoint beyond the origin");
  }
  std::vector<double> s, p;
  s.reserve(points.size());
  p.reserve(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j > 0) {
      if (!(points[j].first > points[j - 1].first)) {
        throw DomainError("table density: abscissae must increase strictly");
      }
      if (points[j].second < points[j - 1].second) {
        throw DomainError("table density: values must be nondecreasing");
      }
      if (!(points[j].second > 0.0)) {
        throw DomainError("table density: p(s) must be positive for s > 0");
      }
    }
    s.push_back(points[j].first);
    p.push_back(points[j].second);
  }
  const std::size_t n = p.size();
  if (!(p[n - 1] > p[n - 2])) {
    throw DomainError(
        "table density: last segment must increase (p must be unbounded)");
  }
  return TableDensity(std::move(s), std::move(p));
}

double TableDensity::density(double s) const {
  const std::size_t n = s_.size();
  const auto k = static_cast<std::size_t>(
      std::upper_bound(s_.begin(), s_.end(), s) - s_.begin());
  if (k == 0) return 0.0;
  if (k == n) {
    const double slope = (p_[n - 1] - p_[n - 2]) / (s_[n - 1] - s_[n - 2]);
    return p_[n - 1] + slope * (s - s_[n - 1]);
  }
  const double w = (s - s_[k - 1]) / (s_[k] - s_[k - 1]);
  return p_[k - 1] + w * (p_[k] - p_[k - 1]);
}

double TableDensity::primitive(double t) const {
  if (!(t > 0.0)) return 0.0;
  const auto k = static_cast<std::size_t>(
      std::upper_bound(s_.begin(), s_.end(), t) - s_.begin());
  const std::size_t j = k - 1;
  return cumulative_[j] + 0.5 * (t - s_[j]) * (p_[j] + density(t));
}

TableDensity TableDensity::swapped() const { return TableDensity(p_, s_); }

std::vector<TableDensity::Point> TableDensity::points() const {
  std::vector<Point> out;
  out.reserve(s_.size());
  for (std::size_t j = 0; j < s_.size(); ++j) out.emplace_back(s_[j], p_[j]);
  return out;
}

// ---------------------------------------------------------------------------
// DensityFunction

DensityFunction DensityFunction::power(double exponent) {
  if (!std::isfinite(exponent) || !(exponent > 1.0)) {
    throw DomainError("power N-function needs exponent > 1");
  }
  return DensityFunction(PowerDensity{exponent});
}

DensityFunction DensityFunction::log_power(double beta) {
  if (!std::isfinite(beta) || !(beta > 1.0)) {
    throw DomainError("log-power N-function needs beta > 1");
  }
  return DensityFunction(LogPowerDensity{beta});
}

DensityFunction DensityFunction::table(std::vector<TableDensity::Point> points) {
  return DensityFunction(TableDensity::from_points(std::move(points)));
}

DensityKind DensityFunction::kind() const {
  return std::visit(Overloaded{
                        [](const PowerDensity&) { return DensityKind::power; },
                        [](const LogPowerDensity&) { return DensityKind::log_power; },
                        [](const TableDensity&) { return DensityKind::table; },
                        [](const InverseDensity&) { return DensityKind::inverse; },
                    },
                    repr_);
}

double DensityFunction::operator()(double s) const {
  if (!(s > 0.0)) return 0.0;
  return std::visit(
      Overloaded{
          [s](const PowerDensity& v) { return std::pow(s, v.exponent - 1.0); },
          [s](const LogPowerDensity& v) {
            if (s < 1.0) return v.beta * std::pow(s, v.beta - 1.0);
            return std::pow(s, v.beta - 1.0) *
                   (v.beta * std::log(s) + v.beta + 1.0);
          },
          [s](const TableDensity& v) { return v.density(s); },
          [s](const InverseDensity& v) { return sup_sublevel(*v.base, s); },
      },
      repr_);
}

double DensityFunction::primitive(double t) const {
  if (!(t > 0.0)) return 0.0;
  return std::visit(
      Overloaded{
          [t](const PowerDensity& v) {
            return std::pow(t, v.exponent) / v.exponent;
          },
          [t](const LogPowerDensity& v) {
            if (t < 1.0) return std::pow(t, v.beta);
            return std::pow(t, v.beta) * (std::log(t) + 1.0);
          },
          [t](const TableDensity& v) { return v.primitive(t); },
          [t](const InverseDensity& v) {
            // Young's equality at the conjugate point q(t).
            const double q = sup_sublevel(*v.base, t);
            return std::max(0.0, t * q - v.base->primitive(q));
          },
      },
      repr_);
}

DensityFunction DensityFunction::generalized_inverse() const {
  return std::visit(
      Overloaded{
          [](const PowerDensity& v) {
            return DensityFunction(PowerDensity{v.exponent / (v.exponent - 1.0)});
          },
          [](const TableDensity& v) { return DensityFunction(v.swapped()); },
          [this](const auto&) {
            return DensityFunction(
                InverseDensity{std::make_shared<const DensityFunction>(*this)});
          },
      },
      repr_);
}

// ---------------------------------------------------------------------------
// NFunction

NFunction::NFunction(DensityFunction density, std::string name)
    : density_(std::make_shared<const DensityFunction>(std::move(density))),
      conjugate_density_(std::make_shared<const DensityFunction>(
          density_->generalized_inverse())),
      name_(name.empty() ? describe(*density_) : std::move(name)) {}

NFunction NFunction::power(double exponent) {
  return NFunction(DensityFunction::power(exponent));
}

NFunction NFunction::log_power(double beta) {
  return NFunction(DensityFunction::log_power(beta));
}

NFunction NFunction::table(std::vector<TableDensity::Point> points) {
  return NFunction(DensityFunction::table(std::move(points)));
}

double NFunction::operator()(double t) const {
  if (!std::isfinite(t)) throw DomainError("Phi: argument must be finite");
  return density_->primitive(std::abs(t));
}

double NFunction::density(double s) const { return (*density_)(s); }

double NFunction::inverse(double y) const {
  if (!std::isfinite(y) || y < 0.0) {
    throw DomainError("Phi inverse: argument must be finite and >= 0");
  }
  if (y == 0.0) return 0.0;
  const DensityFunction& p = *density_;

  // Bracket Phi(lo) < y <= Phi(hi).
  double lo = 0.0;
  double hi = 1.0;
  if (p.primitive(hi) < y) {
    while (p.primitive(hi) < y) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) {
        throw NumericError("Phi inverse: argument beyond representable range");
      }
    }
  } else {
    lo = 0.5;
    while (p.primitive(lo) >= y) {
      hi = lo;
      lo *= 0.5;
      if (lo < std::numeric_limits<double>::min()) return hi;
    }
  }

  // Newton on Phi(t) - y with p as derivative; bisect whenever the step
  // leaves the bracket.
  double t = lo + 0.5 * (hi - lo);
  for (int iter = 0; iter < kMaxRefineIterations; ++iter) {
    const double f = p.primitive(t) - y;
    if (std::abs(f) <= 2.0 * kEps * y) return t;
    if (f < 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    if (hi - lo <= 2.0 * kEps * hi) break;
    const double slope = p(t);
    double next = slope > 0.0 ? t - f / slope : lo + 0.5 * (hi - lo);
    if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);
    if (next == t) break;
    t = next;
  }
  return t;
}

NFunction NFunction::conjugate() const { return NFunction(*conjugate_density_); }

double NFunction::young_gap(double t, double s) const {
  if (!(t >= 0.0) || !(s >= 0.0) || !std::isfinite(t) || !std::isfinite(s)) {
    throw DomainError("young_gap: arguments must be finite and >= 0");
  }
  return density_->primitive(t) + conjugate_density_->primitive(s) - t * s;
}

// ---------------------------------------------------------------------------

Delta2Estimate check_delta2(const NFunction& phi, double k,
                            std::span<const double> grid) {
  if (grid.empty()) throw DomainError("check_delta2: empty grid");
  if (!std::isfinite(k) || !(k > 0.0)) {
    throw DomainError("check_delta2: k must be positive");
  }
  double lo = grid.front();
  double hi = grid.front();
  for (double t : grid) {
    if (!std::isfinite(t) || !(t > 0.0)) {
      throw DomainError("check_delta2: grid points must be positive");
    }
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  if (std::log10(hi / lo) < 8.0 - 1e-9) {
    throw DomainError("check_delta2: grid must span at least 8 decades");
  }

  std::map<int, double> decade_max;
  double r = 0.0;
  for (double t : grid) {
    const double base = phi(t);
    const double scaled = phi(k * t);
    double ratio = scaled / base;
    if (!std::isfinite(ratio)) ratio = std::numeric_limits<double>::infinity();
    r = std::max(r, ratio);
    const int decade = static_cast<int>(std::floor(std::log10(t) + 1e-9));
    auto [it, inserted] = decade_max.try_emplace(decade, ratio);
    if (!inserted) it->second = std::max(it->second, ratio);
  }
  const auto top = decade_max.rbegin();
  const auto previous = std::next(top);
  const bool satisfied = std::isfinite(top->second) &&
                         previous != decade_max.rend() &&
                         top->second <= 1.05 * previous->second;
  return {satisfied, r};
}

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || points_per_decade < 1) {
    throw DomainError("log_grid: need 0 < lo < hi and points_per_decade >= 1");
  }
  const double decades = std::log10(hi / lo);
  const int n = static_cast<int>(std::ceil(decades * points_per_decade - 1e-9));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    grid.push_back(lo * std::pow(10.0, static_cast<double>(i) / points_per_decade));
  }
  grid.push_back(hi);
  return grid;
}

}  // namespace orlicz
