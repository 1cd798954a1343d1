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
#include "orlicz/log_scalar.hpp"

#include <cmath>
#include <utility>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

// Knuth's error-free sum: a + b == s + e exactly.
std::pair<double, double> two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

}  // namespace

LogScalar LogScalar::make(int sign, double hi, double lo) {
  LogScalar out;
  if (sign == 0) return out;
  const auto [s, e] = two_sum(hi, lo);
  out.sign_ = sign > 0 ? 1 : -1;
  out.hi_ = s;
  out.lo_ = e;
  return out;
}

LogScalar LogScalar::from_log(double log_magnitude, int sign) {
  if (std::isnan(log_magnitude)) throw DomainError("LogScalar: NaN log magnitude");
  if (log_magnitude == -INFINITY) return {};
  return make(sign, log_magnitude, 0.0);
}

LogScalar LogScalar::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("LogScalar: non-finite value");
  if (value == 0.0) return {};
  const double magnitude = std::abs(value);
  const double hi = std::log(magnitude);
  // Residual correction so that to_double reproduces `value` exactly.
  const double base = std::exp(hi);
  const double lo = std::log1p((magnitude - base) / base);
  LogScalar out;
  out.sign_ = value > 0.0 ? 1 : -1;
  out.hi_ = hi;
  out.lo_ = lo;
  return out;
}

double LogScalar::to_double() const {
  if (sign_ == 0) return 0.0;
  const double base = std::exp(hi_);
  if (std::isinf(base)) return sign_ * base;
  return sign_ * (base + base * std::expm1(lo_));
}

LogScalar LogScalar::operator-() const {
  LogScalar out = *this;
  out.sign_ = -out.sign_;
  return out;
}

LogScalar LogScalar::reciprocal() const {
  if (sign_ == 0) throw DomainError("LogScalar: reciprocal of zero");
  return make(sign_, -hi_, -lo_);
}

LogScalar LogScalar::pow(double exponent) const {
  if (sign_ == 0) {
    if (exponent > 0.0) return {};
    throw DomainError("LogScalar: zero to a non-positive power");
  }
  const double p = exponent * hi_;
  const double err = std::fma(exponent, hi_, -p);
  return make(sign_, p, err + exponent * lo_);
}

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return {};
  const auto [s, e] = two_sum(a.hi_, b.hi_);
  return LogScalar::make(a.sign_ * b.sign_, s, e + a.lo_ + b.lo_);
}

LogScalar operator+(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  double delta = (b.hi_ - a.hi_) + (b.lo_ - a.lo_);
  const bool a_larger = delta <= 0.0;
  if (!a_larger) delta = -delta;
  const LogScalar& big = a_larger ? a : b;
  const LogScalar& small = a_larger ? b : a;
  if (big.sign_ == small.sign_) {
    return LogScalar::make(big.sign_, big.hi_, big.lo_ + std::log1p(std::exp(delta)));
  }
  if (delta == 0.0) return {};
  return LogScalar::make(big.sign_, big.hi_, big.lo_ + std::log(-std::expm1(delta)));
}

}  // namespace orlicz
