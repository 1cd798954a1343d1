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
#ifndef ORLICZ_LOG_SCALAR_HPP
#define ORLICZ_LOG_SCALAR_HPP

namespace orlicz {

// A real number stored as sign and natural log of its magnitude. The log is
// carried as an unevaluated double-double sum so that products of huge and
// tiny factors (e^{2 beta i^2} against e^{-2 beta i^2}) cancel exactly.
class LogScalar {
 public:
  // Zero.
  LogScalar() = default;

  static LogScalar from_log(double log_magnitude, int sign = 1);
  // Exact round trip through to_double for every finite double.
  static LogScalar from_double(double value);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  // Meaningless when sign() == 0.
  double log_magnitude() const { return hi_ + lo_; }

  double to_double() const;

  LogScalar operator-() const;
  LogScalar reciprocal() const;
  // |x|^exponent with the sign of x; zero stays zero for exponent > 0.
  LogScalar pow(double exponent) const;

  friend LogScalar operator*(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator/(const LogScalar& a, const LogScalar& b) { return a * b.reciprocal(); }
  // Log-sum-exp with cancellation handling for opposite signs.
  friend LogScalar operator+(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator-(const LogScalar& a, const LogScalar& b) { return a + (-b); }

 private:
  static LogScalar make(int sign, double hi, double lo);

  int sign_ = 0;
  double hi_ = 0.0;
  double lo_ = 0.0;
};

}  // namespace orlicz

#endif  // ORLICZ_LOG_SCALAR_HPP
