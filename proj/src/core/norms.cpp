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
#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr int kMaxBracketSteps = 2100;
constexpr int kMaxBisectionSteps = 400;

bool exceeds_unit(const ModularValue& m) { return m.overflow || m.value > 1.0; }

double largest_value(std::span<const WeightedValue> spectrum) {
  double best = 0.0;
  for (const auto& wv : spectrum) best = std::max(best, wv.value);
  return best;
}

void require_finite(const BlockElement& x, const char* what) {
  for (const Matrix& b : x.blocks()) {
    if (!b.allFinite()) throw DomainError(std::string(what) + ": non-finite entries");
  }
}

}  // namespace

ModularValue spectrum_modular(const NFunction& phi, std::span<const WeightedValue> spectrum,
                              double lambda) {
  double total = 0.0;
  for (const auto& wv : spectrum) {
    if (wv.value == 0.0) continue;
    total += wv.weight * phi(wv.value / lambda);
  }
  return {total, !std::isfinite(total)};
}

ModularValue modular(const NFunction& phi, const TraceSpec& tau, const BlockElement& x) {
  const auto spectrum = singular_spectrum(tau, x);
  return spectrum_modular(phi, spectrum);
}

NormResult minkowski_functional(const std::function<ModularValue(double)>& modular_at,
                                double hint) {
  if (!std::isfinite(hint) || !(hint > 0.0)) hint = 1.0;
  NormResult result;

  double hi = hint;
  ModularValue at_hi = modular_at(hi);
  for (int step = 0; exceeds_unit(at_hi); ++step) {
    if (step > kMaxBracketSteps || !std::isfinite(hi)) {
      throw NumericError("norm: no upper bracket (modular never drops to 1)");
    }
    hi *= 2.0;
    at_hi = modular_at(hi);
  }
  if (at_hi.value == 1.0) return {hi, 1.0, 0};

  double lo = 0.5 * hi;
  for (int step = 0;; ++step) {
    const ModularValue at_lo = modular_at(lo);
    if (exceeds_unit(at_lo)) break;
    if (at_lo.value == 1.0) return {lo, 1.0, 0};
    if (step > kMaxBracketSteps || lo < std::numeric_limits<double>::min()) {
      throw NumericError("norm: no lower bracket (modular never reaches 1)");
    }
    hi = lo;
    at_hi = at_lo;
    lo *= 0.5;
  }

  int iter = 0;
  while (hi - lo > kNormRelativeWidth * hi && iter < kMaxBisectionSteps) {
    ++iter;
    const double mid = (hi > 4.0 * lo) ? std::sqrt(lo) * std::sqrt(hi) : lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const ModularValue at_mid = modular_at(mid);
    if (!at_mid.overflow && at_mid.value == 1.0) return {mid, 1.0, iter};
    if (exceeds_unit(at_mid)) {
      lo = mid;
    } else {
      hi = mid;
      at_hi = at_mid;
    }
  }
  result.value = hi;
  result.modular_at_norm = at_hi.value;
  result.iterations = iter;
  return result;
}

NormResult luxemburg_norm(const NFunction& phi, const TraceSpec& tau, const BlockElement& x) {
  require_finite(x, "luxemburg_norm");
  const auto spectrum = singular_spectrum(tau, x);
  const double top = largest_value(spectrum);
  if (top == 0.0) return {};
  const double hint = top / phi.inverse(1.0 / tau.unit_trace());
  return minkowski_functional(
      [&](double lambda) { return spectrum_modular(phi, spectrum, lambda); }, hint);
}

double lp_norm(const TraceSpec& tau, const BlockElement& x, double p) {
  if (!std::isfinite(p) || p < 1.0) throw DomainError("lp_norm: p must be >= 1");
  const auto spectrum = singular_spectrum(tau, x);
  const double top = largest_value(spectrum);
  if (top == 0.0) return 0.0;
  double total = 0.0;
  for (const auto& wv : spectrum) total += wv.weight * std::pow(wv.value / top, p);
  return top * std::pow(total, 1.0 / p);
}

double amemiya_norm(const NFunction& phi, const TraceSpec& tau, const BlockElement& x) {
  require_finite(x, "amemiya_norm");
  const auto spectrum = singular_spectrum(tau, x);
  if (largest_value(spectrum) == 0.0) return 0.0;

  // (1 + M(k x)) / k is quasi-convex in k, so unimodal in u = log k.
  const auto objective = [&](double u) {
    const double k = std::exp(u);
    const ModularValue m = spectrum_modular(phi, spectrum, 1.0 / k);
    if (m.overflow) return std::numeric_limits<double>::infinity();
    return (1.0 + m.value) / k;
  };

  const double luxemburg = luxemburg_norm(phi, tau, x).value;
  double b = -std::log(luxemburg);
  double fb = objective(b);
  double step = 0.5;
  double a = b - step;
  double fa = objective(a);
  double c = b + step;
  double fc = objective(c);
  for (int guard = 0; guard < 200 && (fa < fb || fc < fb); ++guard) {
    step *= 2.0;
    if (fa < fb) {
      c = b;
      fc = fb;
      b = a;
      fb = fa;
      a = b - step;
      fa = objective(a);
    } else {
      a = b;
      fa = fb;
      b = c;
      fb = fc;
      c = b + step;
      fc = objective(c);
    }
  }

  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = c - kInvPhi * (c - a);
  double x2 = a + kInvPhi * (c - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  double best = std::min({fa, fb, fc, f1, f2});
  for (int iter = 0; iter < 200 && (c - a) > 1e-10; ++iter) {
    if (f1 <= f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - kInvPhi * (c - a);
      f1 = objective(x1);
      best = std::min(best, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (c - a);
      f2 = objective(x2);
      best = std::min(best, f2);
    }
  }
  return best;
}

}  // namespace orlicz
