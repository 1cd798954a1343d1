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
#include "orlicz/proptest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "orlicz/algebra.hpp"
#include "orlicz/counterexample.hpp"
#include "orlicz/duality.hpp"
#include "orlicz/io.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/random.hpp"
#include "orlicz/weighted.hpp"

namespace orlicz::proptest {

namespace {

using DataFn = std::function<Json()>;

class Recorder {
 public:
  Recorder(std::string name, const SuiteParams& params) : params_(params) {
    result_.name = std::move(name);
    result_.worst_slack = std::numeric_limits<double>::infinity();
  }

  double tol(double base) const { return base * params_.tol_scale; }

  void begin(int instance) {
    instance_ = instance;
    ++result_.instances;
  }

  // Passes when observed <= allowed; NaN fails.
  void check(const char* what, double observed, double allowed, const DataFn& data) {
    ++result_.checks;
    const double slack = allowed - observed;
    if (!(observed <= allowed)) {
      fail(what, observed, allowed, data ? data() : Json());
      result_.worst_slack = std::isnan(slack) ? -std::numeric_limits<double>::infinity()
                                              : std::min(result_.worst_slack, slack);
      return;
    }
    result_.worst_slack = std::min(result_.worst_slack, slack);
  }

  void error(const std::string& message) {
    ++result_.checks;
    result_.worst_slack = -std::numeric_limits<double>::infinity();
    fail("exception", std::nan(""), 0.0, Json{{"message", message}});
  }

  Json& info() { return result_.info; }

  SuiteResult finish() { return std::move(result_); }

 private:
  void fail(const char* what, double observed, double allowed, Json data) {
    result_.passed = false;
    if (result_.failure) return;
    Json f = {{"suite", result_.name},
              {"seed", params_.seed},
              {"instance", instance_},
              {"check", what},
              {"observed", std::isfinite(observed) ? Json(observed) : Json()},
              {"allowed", allowed}};
    if (!data.is_null()) f["data"] = std::move(data);
    result_.failure = std::move(f);
  }

  SuiteParams params_;
  SuiteResult result_;
  int instance_ = 0;
};

template <class Body>
SuiteResult for_instances(const std::string& name, const SuiteParams& params, Body body) {
  Recorder rec(name, params);
  for (int i = 0; i < params.count; ++i) {
    InstanceGenerator gen(derive_seed(params.seed, name, static_cast<std::uint64_t>(i)));
    rec.begin(i);
    try {
      body(gen, rec);
    } catch (const std::exception& e) {
      rec.error(e.what());
    }
  }
  return rec.finish();
}

double scale_of(double a, double b = 0.0) { return std::max({1.0, std::abs(a), std::abs(b)}); }

Json instance_json(const NFunction& phi, const TraceSpec& tau) {
  return {{"phi", io::to_json(phi)}, {"trace", io::to_json(tau)}};
}

Json instance_json(const NFunction& phi, const TraceSpec& tau, const BlockElement& x) {
  Json j = instance_json(phi, tau);
  j["x"] = io::to_json(x);
  return j;
}

Json instance_json(const NFunction& phi, const TraceSpec& tau, const BlockElement& x,
                   const BlockElement& y) {
  Json j = instance_json(phi, tau, x);
  j["y"] = io::to_json(y);
  return j;
}

BlockElement scaled_element(InstanceGenerator& gen, const BlockShape& shape) {
  return gen.element(shape) * Complex(gen.log_uniform(0.1, 10.0));
}

// Up to one 4x4 block plus one 3x3 block.
BlockShape isometry_shape(InstanceGenerator& gen) {
  std::vector<int> dims{gen.uniform_int(1, 4)};
  if (gen.uniform_int(0, 1) == 1) dims.push_back(gen.uniform_int(1, 3));
  return BlockShape(std::move(dims));
}

NFunction power_phi(InstanceGenerator& gen, double* exponent) {
  static const double exponents[] = {1.5, 2.0, 3.0};
  *exponent = exponents[gen.uniform_int(0, 2)];
  return NFunction::power(*exponent);
}

BlockElement real_diagonal(InstanceGenerator& gen, const BlockShape& shape) {
  std::vector<double> entries;
  for (int i = 0; i < shape.total_dimension(); ++i) entries.push_back(gen.normal());
  return BlockElement::diagonal(shape, entries);
}

// ---------------------------------------------------------------------------
// N-functions

SuiteResult convexity(const SuiteParams& p) {
  return for_instances("convexity", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const double t1 = gen.log_uniform(1e-3, 1e3);
    const double t2 = gen.log_uniform(1e-3, 1e3);
    const double lambda = gen.uniform(0.0, 1.0);
    const double lhs = phi(lambda * t1 + (1.0 - lambda) * t2);
    const double rhs = lambda * phi(t1) + (1.0 - lambda) * phi(t2);
    rec.check("convexity", lhs, rhs + rec.tol(1e-10) * scale_of(rhs), [&] {
      return Json{{"phi", io::to_json(phi)}, {"t1", t1}, {"t2", t2}, {"lambda", lambda}};
    });
  });
}

SuiteResult conjugate_involution(const SuiteParams& p) {
  const std::vector<NFunction> phis = {
      NFunction::power(1.5),    NFunction::power(2.0),    NFunction::power(3.0),
      NFunction::log_power(1.5), NFunction::log_power(2.0), NFunction::log_power(3.0),
      NFunction::table({{0.0, 0.0}, {1.0, 1.0}, {2.0, 1.0}, {3.0, 4.0}, {5.0, 5.0}})};
  SuiteParams fixed = p;
  fixed.count = static_cast<int>(phis.size());
  std::vector<double> grid;
  for (int k = 0; k < 64; ++k) grid.push_back(1e-2 * std::pow(10.0, 4.0 * k / 63.0));
  int index = 0;
  return for_instances("conjugate_involution", fixed, [&](InstanceGenerator&, Recorder& rec) {
    const NFunction& phi = phis[static_cast<std::size_t>(index++)];
    const NFunction twice = phi.conjugate().conjugate();
    double worst = 0.0;
    double worst_t = 0.0;
    for (double t : grid) {
      const double err = std::abs(twice(t) - phi(t)) / phi(t);
      if (!(err <= worst)) {
        worst = err;
        worst_t = t;
      }
    }
    const bool tabulated = phi.density_function().kind() == DensityKind::table;
    rec.check("double conjugate", worst, rec.tol(tabulated ? 1e-3 : 1e-6), [&] {
      return Json{{"phi", io::to_json(phi)}, {"t", worst_t}};
    });
  });
}

SuiteResult inverse_roundtrip(const SuiteParams& p) {
  static const NFunction table =
      NFunction::table({{0.0, 0.0}, {1.0, 1.0}, {2.0, 1.0}, {3.0, 4.0}, {5.0, 5.0}});
  return for_instances("inverse_roundtrip", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.uniform_int(0, 4) == 0 ? table : gen.standard_phi();
    const double t = gen.log_uniform(1e-6, 1e6);
    const double back = phi.inverse(phi(t));
    rec.check("inverse(phi(t))", std::abs(back - t), rec.tol(1e-9) * t, [&] {
      return Json{{"phi", io::to_json(phi)}, {"t", t}};
    });
    rec.check("inverse(0)", std::abs(phi.inverse(0.0)), 0.0, [&] {
      return Json{{"phi", io::to_json(phi)}};
    });
  });
}

SuiteResult young_inequality(const SuiteParams& p) {
  return for_instances("young_inequality", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const NFunction psi = phi.conjugate();
    const double t = gen.log_uniform(1e-3, 1e3);
    const double s = gen.log_uniform(1e-3, 1e3);
    const auto data = [&] { return Json{{"phi", io::to_json(phi)}, {"t", t}, {"s", s}}; };
    const double gap = phi.young_gap(t, s);
    rec.check("gap >= 0", -gap, rec.tol(1e-10) * scale_of(phi(t) + psi(s)), data);
    const double sp = phi.density(t);
    const double eq = phi.young_gap(t, sp);
    rec.check("equality at s = p(t)", std::abs(eq), rec.tol(1e-9) * scale_of(t * sp), data);
  });
}

// ---------------------------------------------------------------------------
// Trace inequalities and algebra

SuiteResult trace_monotonicity(const SuiteParams& p) {
  return for_instances("trace_monotonicity", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = gen.positive(shape);
    const BlockElement y = x + gen.positive(shape) * Complex(gen.log_uniform(1e-3, 1.0));
    const auto data = [&] { return instance_json(phi, tau, x, y); };
    const double lhs = modular(phi, tau, x).value;
    const double rhs = modular(phi, tau, y).value;
    rec.check("tau(phi(x)) <= tau(phi(y))", lhs, rhs + rec.tol(1e-9) * scale_of(rhs), data);
    const double tx = trace(tau, x).real();
    const double ty = trace(tau, y).real();
    rec.check("tau(x) <= tau(y)", tx, ty + rec.tol(1e-9) * scale_of(ty), data);
    const double sx = trace(tau, x * x).real();
    const double sy = trace(tau, y * y).real();
    rec.check("tau(x^2) <= tau(y^2)", sx, sy + rec.tol(1e-9) * scale_of(sy), data);
  });
}

SuiteResult modular_convexity(const SuiteParams& p) {
  return for_instances("modular_convexity", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = gen.element(shape);
    const BlockElement y = gen.element(shape);
    const double lambda = gen.uniform(0.0, 1.0);
    const double lhs = modular(phi, tau, x * Complex(lambda) + y * Complex(1.0 - lambda)).value;
    const double rhs =
        lambda * modular(phi, tau, x).value + (1.0 - lambda) * modular(phi, tau, y).value;
    rec.check("modular convexity", lhs, rhs + rec.tol(1e-9) * scale_of(rhs), [&] {
      Json j = instance_json(phi, tau, x, y);
      j["lambda"] = lambda;
      return j;
    });
  });
}

SuiteResult contraction_inequality(const SuiteParams& p) {
  return for_instances("contraction_inequality", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = gen.positive(shape);
    BlockElement z = gen.element(shape);
    z *= Complex(gen.uniform(0.1, 1.0) / z.operator_norm());
    const BlockElement zxz = z.adjoint() * x * z;
    const BlockElement herm = (zxz + zxz.adjoint()) * Complex(0.5);
    const double lhs = modular(phi, tau, herm).value;
    const BlockElement phix = func_calc([&](double v) { return phi(v); }, x);
    const double rhs = trace(tau, z.adjoint() * phix * z).real();
    rec.check("tau(phi(z*xz)) <= tau(z*phi(x)z)", lhs, rhs + rec.tol(1e-9) * scale_of(rhs),
              [&] { return instance_json(phi, tau, x, z); });
  });
}

SuiteResult polar_reconstruction(const SuiteParams& p) {
  return for_instances("polar_reconstruction", p, [](InstanceGenerator& gen, Recorder& rec) {
    const BlockShape shape = gen.shape(3, 4);
    BlockElement x = gen.element(shape);
    if (gen.uniform_int(0, 3) == 0) {
      // Rank-deficient: drop the first column of every block.
      for (int k = 0; k < shape.block_count(); ++k) x.block(k).col(0).setZero();
    }
    const PolarDecomposition pd = polar(x);
    const double size = std::max(x.frobenius_norm(), 1e-300);
    const auto data = [&] { return Json{{"x", io::to_json(x)}}; };
    rec.check("x = u|x|", (x - pd.isometry * pd.modulus).frobenius_norm() / size,
              rec.tol(1e-10), data);
    const BlockElement e = pd.isometry.adjoint() * pd.isometry;
    rec.check("u*u projection", (e * e - e).frobenius_norm(), rec.tol(1e-10), data);
    rec.check("|x| hermitian", pd.modulus.hermitian_defect() / size, rec.tol(1e-12), data);
  });
}

SuiteResult trace_cyclicity(const SuiteParams& p) {
  return for_instances("trace_cyclicity", p, [](InstanceGenerator& gen, Recorder& rec) {
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = gen.element(shape);
    const BlockElement y = gen.element(shape);
    const double wmax = *std::max_element(tau.weights().begin(), tau.weights().end());
    const double size = wmax * x.frobenius_norm() * y.frobenius_norm();
    rec.check("tau(xy) = tau(yx)", std::abs(trace(tau, x * y) - trace(tau, y * x)),
              rec.tol(1e-12) * scale_of(size), [&] {
                return Json{{"trace", io::to_json(tau)}, {"x", io::to_json(x)},
                            {"y", io::to_json(y)}};
              });
  });
}

// ---------------------------------------------------------------------------
// Norms

SuiteResult homogeneity(const SuiteParams& p) {
  return for_instances("homogeneity", p, [](InstanceGenerator& gen, Recorder& rec) {
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = scaled_element(gen, shape);
    const Complex c = std::polar(gen.log_uniform(1e-2, 1e2), gen.uniform(0.0, 6.283185307179586));
    for (const NFunction& phi : standard_phis()) {
      const double nx = luxemburg_norm(phi, tau, x).value;
      const double ncx = luxemburg_norm(phi, tau, x * c).value;
      rec.check("||cx|| = |c| ||x||", std::abs(ncx - std::abs(c) * nx),
                rec.tol(1e-9) * std::abs(c) * nx, [&] {
                  Json j = instance_json(phi, tau, x);
                  j["c"] = {c.real(), c.imag()};
                  return j;
                });
    }
  });
}

SuiteResult triangle(const SuiteParams& p) {
  return for_instances("triangle", p, [](InstanceGenerator& gen, Recorder& rec) {
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = scaled_element(gen, shape);
    const BlockElement y = scaled_element(gen, shape);
    for (const NFunction& phi : standard_phis()) {
      const double nx = luxemburg_norm(phi, tau, x).value;
      const double ny = luxemburg_norm(phi, tau, y).value;
      const double nxy = luxemburg_norm(phi, tau, x + y).value;
      rec.check("||x+y|| <= ||x|| + ||y||", nxy, nx + ny + rec.tol(1e-9) * (nx + ny),
                [&] { return instance_json(phi, tau, x, y); });
    }
  });
}

SuiteResult definiteness(const SuiteParams& p) {
  return for_instances("definiteness", p, [](InstanceGenerator& gen, Recorder& rec) {
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = gen.element(shape) * Complex(gen.log_uniform(1e-6, 1e6));
    for (const NFunction& phi : standard_phis()) {
      const double nx = luxemburg_norm(phi, tau, x).value;
      rec.check("||x|| > 0 for x != 0", nx > 0.0 ? 0.0 : 1.0, 0.0,
                [&] { return instance_json(phi, tau, x); });
      const double n0 = luxemburg_norm(phi, tau, BlockElement::zero(shape)).value;
      rec.check("||0|| = 0", std::abs(n0), 0.0, [&] { return instance_json(phi, tau); });
    }
  });
}

SuiteResult modular_at_norm(const SuiteParams& p) {
  return for_instances("modular_at_norm", p, [](InstanceGenerator& gen, Recorder& rec) {
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = scaled_element(gen, shape);
    for (const NFunction& phi : standard_phis()) {
      const double nx = luxemburg_norm(phi, tau, x).value;
      const double m = modular(phi, tau, x * Complex(1.0 / nx)).value;
      rec.check("modular(x/||x||) = 1", std::abs(m - 1.0), rec.tol(1e-8),
                [&] { return instance_json(phi, tau, x); });
    }
  });
}

SuiteResult unitary_invariance(const SuiteParams& p) {
  return for_instances("unitary_invariance", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = scaled_element(gen, shape);
    const BlockElement u = gen.unitary(shape);
    const BlockElement v = gen.unitary(shape);
    const double nx = luxemburg_norm(phi, tau, x).value;
    const double nuxv = luxemburg_norm(phi, tau, u * x * v).value;
    rec.check("||uxv|| = ||x||", std::abs(nuxv - nx), rec.tol(1e-9) * nx,
              [&] { return instance_json(phi, tau, x); });
  });
}

SuiteResult diagonal_monotonicity(const SuiteParams& p) {
  return for_instances("diagonal_monotonicity", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = BlockShape::commutative(gen.uniform_int(1, 8));
    const TraceSpec tau = gen.trace(shape);
    std::vector<double> a;
    std::vector<double> b;
    for (int i = 0; i < shape.total_dimension(); ++i) {
      a.push_back(gen.uniform(0.0, 3.0));
      b.push_back(a.back() + gen.uniform(0.0, 1.0));
    }
    const BlockElement x = BlockElement::diagonal(shape, a);
    const BlockElement y = BlockElement::diagonal(shape, b);
    const double nx = luxemburg_norm(phi, tau, x).value;
    const double ny = luxemburg_norm(phi, tau, y).value;
    rec.check("|x| <= |y| => ||x|| <= ||y||", nx, ny + rec.tol(1e-10) * scale_of(ny),
              [&] { return instance_json(phi, tau, x, y); });
  });
}

SuiteResult truncation_convergence(const SuiteParams& p) {
  return for_instances("truncation_convergence", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    std::vector<double> eig;
    double smallest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < shape.total_dimension(); ++i) {
      const bool zero = i > 0 && gen.uniform_int(0, 3) == 0;
      eig.push_back(zero ? 0.0 : gen.uniform(0.05, 5.0));
      if (!zero) smallest = std::min(smallest, eig.back());
    }
    const BlockElement v = gen.unitary(shape);
    BlockElement x = v * BlockElement::diagonal(shape, eig) * v.adjoint();
    x = (x + x.adjoint()) * Complex(0.5);
    const double nx = luxemburg_norm(phi, tau, x).value;
    const auto data = [&] { return instance_json(phi, tau, x); };
    // First n with 1/n < smallest, then two more steps.
    const int settle = static_cast<int>(std::floor(1.0 / smallest)) + 1;
    double previous = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= settle + 2; ++n) {
      const double d = luxemburg_norm(phi, tau, x - spectral_truncate(x, 1.0 / n)).value;
      rec.check("nonincreasing in n", d, previous + rec.tol(1e-12) * nx, data);
      if (n >= settle) rec.check("zero once 1/n < min eigenvalue", d, rec.tol(1e-12) * nx, data);
      previous = d;
    }
  });
}

SuiteResult lp_collapse(const SuiteParams& p) {
  return for_instances("lp_collapse", p, [](InstanceGenerator& gen, Recorder& rec) {
    double exponent = 0.0;
    const NFunction phi = power_phi(gen, &exponent);
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = scaled_element(gen, shape);
    const double lux = luxemburg_norm(phi, tau, x).value;
    const double lp = std::pow(exponent, -1.0 / exponent) * lp_norm(tau, x, exponent);
    rec.check("luxemburg = p^{-1/p} lp", std::abs(lux - lp), rec.tol(1e-10) * lp,
              [&] { return instance_json(phi, tau, x); });
  });
}

SuiteResult amemiya_sandwich(const SuiteParams& p) {
  return for_instances("amemiya_sandwich", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = scaled_element(gen, shape);
    const double lux = luxemburg_norm(phi, tau, x).value;
    const double am = amemiya_norm(phi, tau, x);
    const auto data = [&] { return instance_json(phi, tau, x); };
    rec.check("luxemburg <= amemiya", lux, am + rec.tol(1e-9) * am, data);
    rec.check("amemiya <= 2 luxemburg", am, 2.0 * lux * (1.0 + rec.tol(1e-9)), data);
  });
}

SuiteResult holder_bound(const SuiteParams& p) {
  return for_instances("holder_bound", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const NFunction psi = phi.conjugate();
    const BlockShape shape = gen.shape(3, 4);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = gen.element(shape);
    const BlockElement y = gen.element(shape);
    const double lhs = std::abs(pairing(tau, x, y));
    const double rhs = luxemburg_norm(phi, tau, x).value * amemiya_norm(psi, tau, y);
    rec.check("|tau(xy)| <= ||x||_phi ||y||_psi", lhs, rhs * (1.0 + rec.tol(1e-9)),
              [&] { return instance_json(phi, tau, x, y); });
  });
}

// ---------------------------------------------------------------------------
// Weighted spaces

Json weighted_json(const NFunction& phi, const TraceSpec& tau, const WeightSpec& w,
                   const BlockElement& x) {
  Json j = instance_json(phi, tau, x);
  j["weight"] = io::to_json(w);
  return j;
}

double pick_alpha(InstanceGenerator& gen) {
  static const double alphas[] = {0.0, 0.3, 1.0};
  return alphas[gen.uniform_int(0, 2)];
}

SuiteResult isometry(const SuiteParams& p) {
  return for_instances("isometry", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau = gen.trace(shape);
    const WeightSpec w = gen.weight(shape, pick_alpha(gen), 1e4);
    const BlockElement x = scaled_element(gen, shape);
    const WeightedSpace space(phi, w, tau);
    const double weighted = space.norm(x).value;
    const double direct = luxemburg_norm(phi, tau, space.u_map(x)).value;
    rec.check("weighted norm = luxemburg(U x)", std::abs(weighted - direct),
              rec.tol(1e-10) * weighted, [&] { return weighted_json(phi, tau, w, x); });
  });
}

SuiteResult u_linearity(const SuiteParams& p) {
  return for_instances("u_linearity", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau(shape);
    const WeightSpec w = gen.weight(shape, gen.uniform(0.0, 1.0), 1e4);
    const BlockElement x = gen.element(shape);
    const BlockElement y = gen.element(shape);
    const Complex a = gen.complex_normal();
    const Complex b = gen.complex_normal();
    const WeightTransform u(phi, w);
    const BlockElement ux = u.apply(x);
    const BlockElement uy = u.apply(y);
    const double err = (u.apply(x * a + y * b) - (ux * a + uy * b)).frobenius_norm();
    const double size = std::abs(a) * ux.frobenius_norm() + std::abs(b) * uy.frobenius_norm();
    rec.check("U(ax+by) = aU(x) + bU(y)", err, rec.tol(1e-11) * scale_of(size), [&] {
      Json j = weighted_json(phi, tau, w, x);
      j["y"] = io::to_json(y);
      return j;
    });
  });
}

SuiteResult u_inverse_roundtrip(const SuiteParams& p) {
  return for_instances("u_inverse_roundtrip", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau(shape);
    const WeightSpec w = gen.weight(shape, gen.uniform(0.0, 1.0), 1e4);
    const BlockElement x = gen.element(shape);
    const WeightTransform u(phi, w);
    const double err = (u.invert(u.apply(x)) - x).frobenius_norm();
    rec.check("U^{-1}(U x) = x", err, rec.tol(1e-9) * x.frobenius_norm(),
              [&] { return weighted_json(phi, tau, w, x); });
  });
}

SuiteResult weighted_convexity(const SuiteParams& p) {
  return for_instances("weighted_convexity", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau = gen.trace(shape);
    const WeightSpec w = gen.weight(shape, pick_alpha(gen), 1e4);
    const WeightedSpace space(phi, w, tau);
    const BlockElement x = gen.element(shape);
    const BlockElement y = gen.element(shape);
    const double lambda = gen.uniform(0.0, 1.0);
    const double lhs = space.modular(x * Complex(lambda) + y * Complex(1.0 - lambda)).value;
    const double rhs =
        lambda * space.modular(x).value + (1.0 - lambda) * space.modular(y).value;
    const auto data = [&] {
      Json j = weighted_json(phi, tau, w, x);
      j["y"] = io::to_json(y);
      j["lambda"] = lambda;
      return j;
    };
    rec.check("weighted modular convexity", lhs, rhs + rec.tol(1e-9) * scale_of(rhs), data);
    const double ox = space.modular(x).value;
    const Complex c = std::polar(gen.uniform(0.0, 1.0), gen.uniform(0.0, 6.283185307179586));
    rec.check("balanced: O(cx) <= O(x)", space.modular(x * c).value,
              ox + rec.tol(1e-9) * scale_of(ox), data);
  });
}

SuiteResult alpha_independence(const SuiteParams& p) {
  static const double alphas[] = {0.25, 0.5, 0.75, 1.0};
  double spread = 0.0;
  SuiteResult r = for_instances(
      "alpha_independence", p, [&spread](InstanceGenerator& gen, Recorder& rec) {
        const NFunction phi = gen.standard_phi();
        const BlockShape shape = isometry_shape(gen);
        const TraceSpec tau = gen.trace(shape);
        const WeightSpec w = gen.weight(shape, 0.0, 1e4, true);
        const BlockElement x = real_diagonal(gen, shape);
        const double base = WeightedSpace(phi, w, tau).norm(x).value;
        for (double alpha : alphas) {
          const double n = WeightedSpace(phi, w.with_alpha(alpha), tau).norm(x).value;
          rec.check("commuting h, x: norm independent of alpha", std::abs(n - base),
                    rec.tol(1e-9) * base, [&] { return weighted_json(phi, tau, w, x); });
        }
        // Non-commuting pair: reported, not checked.
        const WeightSpec g = gen.weight(shape, 0.0, 1e4);
        const BlockElement y = gen.element(shape);
        const double gbase = WeightedSpace(phi, g, tau).norm(y).value;
        for (double alpha : alphas) {
          const double n = WeightedSpace(phi, g.with_alpha(alpha), tau).norm(y).value;
          spread = std::max(spread, std::abs(n - gbase) / gbase);
        }
      });
  r.info["noncommuting_max_relative_spread"] = spread;
  return r;
}

SuiteResult weighted_definiteness(const SuiteParams& p) {
  return for_instances("weighted_definiteness", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau = gen.trace(shape);
    const WeightSpec w = gen.weight(shape, pick_alpha(gen), 1e4);
    const WeightedSpace space(phi, w, tau);
    const BlockElement x = scaled_element(gen, shape);
    const double floor = 1e-12 * x.frobenius_norm() / w.condition_bound();
    rec.check("||x||_w > 1e-12 |x|_F / cond", floor - space.norm(x).value, 0.0,
              [&] { return weighted_json(phi, tau, w, x); });
    rec.check("||0||_w = 0", std::abs(space.norm(BlockElement::zero(shape)).value), 0.0,
              [&] { return weighted_json(phi, tau, w, x); });
  });
}

SuiteResult trunov_collapse(const SuiteParams& p) {
  return for_instances("trunov_collapse", p, [](InstanceGenerator& gen, Recorder& rec) {
    double exponent = 0.0;
    const NFunction phi = power_phi(gen, &exponent);
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau = gen.trace(shape);
    const WeightSpec w = gen.weight(shape, gen.uniform(0.0, 1.0), 1e4);
    const BlockElement x = scaled_element(gen, shape);
    const double weighted = weighted_norm(phi, w, tau, x).value;
    const double trunov = trunov_lp_norm(tau, w.density(), x, exponent, w.alpha());
    rec.check("weighted norm = weighted Lp norm", std::abs(weighted - trunov),
              rec.tol(1e-9) * trunov, [&] { return weighted_json(phi, tau, w, x); });
  });
}

SuiteResult lemma1(const SuiteParams& p) {
  return for_instances("lemma1", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau = gen.trace(shape);
    const WeightSpec w = gen.weight(shape, pick_alpha(gen), 1e4);
    const WeightedSpace space(phi, w, tau);
    const BlockElement x = scaled_element(gen, shape);
    const int mode = gen.uniform_int(0, 9);
    const double lambda = mode == 0 ? 0.0 : mode == 1 ? 1.0 : gen.uniform(0.0, 1.0);
    const double gap = space.lemma1_gap(x, lambda);
    rec.check("lambda O(x) >= O(lambda x)", -gap,
              rec.tol(1e-10) * scale_of(space.modular(x).value), [&] {
                Json j = weighted_json(phi, tau, w, x);
                j["lambda"] = lambda;
                return j;
              });
  });
}

// ---------------------------------------------------------------------------
// Duality

SuiteResult dual_diag_amemiya(const SuiteParams& p) {
  return for_instances("dual_diag_amemiya", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const NFunction psi = phi.conjugate();
    const BlockShape shape = BlockShape::commutative(gen.uniform_int(1, 6));
    const TraceSpec tau = gen.trace(shape);
    const BlockElement y = real_diagonal(gen, shape);
    const DualNormEstimate d = dual_norm_diag(phi, tau, y);
    const double am = amemiya_norm(psi, tau, y);
    const double lux = luxemburg_norm(psi, tau, y).value;
    const auto data = [&] { return instance_json(phi, tau, y); };
    rec.check("dual = amemiya(psi)", std::abs(d.lower - am), rec.tol(1e-6) * scale_of(am), data);
    rec.check("luxemburg(psi) <= dual", lux, d.lower * (1.0 + rec.tol(1e-9)), data);
    rec.check("dual <= 2 luxemburg(psi)", d.upper, 2.0 * lux * (1.0 + rec.tol(1e-9)), data);
    rec.check("certified bracket", d.upper - d.lower, rec.tol(1e-8) * scale_of(d.upper), data);
  });
}

SuiteResult dual_matrix_gap(const SuiteParams& p) {
  return for_instances("dual_matrix_gap", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = NFunction::power(2.0);
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau = gen.trace(shape);
    const BlockElement y = gen.element(shape);
    const DualNormEstimate d = dual_norm_search(phi, tau, y);
    const double closed = std::sqrt(2.0) * lp_norm(tau, y, 2.0);
    const auto data = [&] { return instance_json(phi, tau, y); };
    rec.check("lower <= upper", d.lower, d.upper * (1.0 + rec.tol(1e-9)), data);
    rec.check("gap <= 5%", d.upper - d.lower, 0.05 * d.upper, data);
    rec.check("upper = sqrt(2) ||y||_2", std::abs(d.upper - closed), rec.tol(1e-6) * closed,
              data);
  });
}

SuiteResult dual_search_sandwich(const SuiteParams& p) {
  double worst_gap = 0.0;
  SuiteResult r = for_instances(
      "dual_search_sandwich", p, [&worst_gap](InstanceGenerator& gen, Recorder& rec) {
        const NFunction phi = gen.standard_phi();
        const NFunction psi = phi.conjugate();
        const BlockShape shape = isometry_shape(gen);
        const TraceSpec tau = gen.trace(shape);
        const BlockElement y = gen.element(shape);
        const DualNormEstimate d = dual_norm_search(phi, tau, y);
        const double lux = luxemburg_norm(psi, tau, y).value;
        const auto data = [&] { return instance_json(phi, tau, y); };
        rec.check("luxemburg(psi) <= lower", lux, d.lower * (1.0 + rec.tol(1e-9)), data);
        rec.check("lower <= upper", d.lower, d.upper * (1.0 + rec.tol(1e-9)), data);
        rec.check("upper <= 2 luxemburg(psi)", d.upper, 2.0 * lux * (1.0 + rec.tol(1e-9)), data);
        worst_gap = std::max(worst_gap, (d.upper - d.lower) / d.upper);
      });
  r.info["max_relative_gap"] = worst_gap;
  return r;
}

SuiteResult dual_commuting_reduction(const SuiteParams& p) {
  return for_instances("dual_commuting_reduction", p, [](InstanceGenerator& gen, Recorder& rec) {
    const NFunction phi = gen.standard_phi();
    const BlockShape shape = isometry_shape(gen);
    const TraceSpec tau = gen.trace(shape);
    // Hermitian y = V diag(d) V*; the diagonal problem carries the block
    // weight on every coordinate of its block.
    std::vector<double> d;
    std::vector<double> coordinate_weights;
    for (int k = 0; k < shape.block_count(); ++k) {
      for (int i = 0; i < shape.dim(k); ++i) {
        d.push_back(gen.normal());
        coordinate_weights.push_back(tau.weight(k));
      }
    }
    const BlockElement v = gen.unitary(shape);
    BlockElement y = v * BlockElement::diagonal(shape, d) * v.adjoint();
    y = (y + y.adjoint()) * Complex(0.5);
    const BlockShape flat = BlockShape::commutative(shape.total_dimension());
    const double diag =
        dual_norm_diag(phi, TraceSpec(flat, coordinate_weights), BlockElement::diagonal(flat, d))
            .lower;
    const double search = dual_norm_search(phi, tau, y).lower;
    rec.check("search = diagonal solution", std::abs(search - diag), rec.tol(1e-4) * diag,
              [&] { return instance_json(phi, tau, y); });
  });
}

SuiteResult reflexivity(const SuiteParams& p) {
  return for_instances("reflexivity", p, [](InstanceGenerator& gen, Recorder& rec) {
    double exponent = 0.0;
    const NFunction phi = power_phi(gen, &exponent);
    const BlockShape shape = BlockShape::commutative(gen.uniform_int(1, 6));
    const TraceSpec tau = gen.trace(shape);
    const BlockElement x = real_diagonal(gen, shape);
    const double lux = luxemburg_norm(phi, tau, x).value;
    const double bidual = bidual_norm_diag(phi, tau, x);
    rec.check("bidual = norm", std::abs(bidual - lux), rec.tol(1e-4) * lux,
              [&] { return instance_json(phi, tau, x); });
    for (int k = 0; k < 4; ++k) {
      const BlockElement y = real_diagonal(gen, shape);
      const double ratio = std::abs(pairing(tau, x, y)) / dual_norm_diag(phi, tau, y).upper;
      rec.check("|f_y(x)| / ||f_y|| <= ||x||", ratio, lux * (1.0 + rec.tol(1e-9)),
                [&] { return instance_json(phi, tau, x, y); });
    }
  });
}

// ---------------------------------------------------------------------------
// Counterexample

constexpr double kExampleBetas[] = {1.5, 2.0, 3.0};

SuiteResult counterexample_exactness(const SuiteParams& p) {
  SuiteParams fixed = p;
  fixed.count = 3;
  return for_instances("counterexample_exactness", fixed, [](InstanceGenerator&, Recorder& rec) {
    for (double beta : kExampleBetas) {
      const ExampleData data = build_example(beta, 10);
      for (int n = 2; n <= 10; ++n) {
        const double expected = inverse_square_sum(n);
        const double got = modular_mu_nu(data, n);
        rec.check("modular_mu_nu(n) = sum 1/i^2", std::abs(got - expected),
                  rec.tol(1e-12) * expected,
                  [&] { return Json{{"beta", beta}, {"n", n}}; });
        std::vector<LogScalar> single(static_cast<std::size_t>(data.n_max));
        single[static_cast<std::size_t>(n - 1)] = data.at(n).x;
        const double term = modular_mu_nu_at(data, single);
        const double want = 1.0 / (static_cast<double>(n) * n);
        rec.check("per-term value 1/i^2", std::abs(term - want), rec.tol(1e-12) * want,
                  [&] { return Json{{"beta", beta}, {"i", n}}; });
      }
    }
  });
}

SuiteResult counterexample_separation(const SuiteParams& p) {
  SuiteParams fixed = p;
  fixed.count = 1;
  return for_instances("counterexample_separation", fixed, [](InstanceGenerator&, Recorder& rec) {
    for (double beta : kExampleBetas) {
      const ExampleData data = build_example(beta, 10);
      double previous_ratio = 0.0;
      double previous_norm = 0.0;
      for (int n = 2; n <= 10; ++n) {
        const auto where = [&] { return Json{{"beta", beta}, {"n", n}}; };
        const double mm = modular_mu_mu(data, n);
        rec.check("modular_mu_mu > harmonic sum", harmonic_lower_bound(n) - mm, 0.0, where);
        rec.check("modular_mu_nu < 1", modular_mu_nu(data, n) - 1.0, 0.0, where);
        if (n == 7) rec.check("modular_mu_mu(7) > 1", 1.0 - mm, 0.0, where);
        const double ratio = norm_ratio(data, n);
        const double norm = norm_mu_mu(data, n).value;
        rec.check("ratio > 1", 1.0 - ratio, 0.0, where);
        rec.check("ratio nondecreasing", previous_ratio - ratio, 0.0, where);
        rec.check("required scale nondecreasing", previous_norm - norm, 0.0, where);
        previous_ratio = ratio;
        previous_norm = norm;
      }
    }
  });
}

std::vector<Suite> build_registry() {
  std::vector<Suite> s = {
      {"alpha_independence", "commuting h and x: weighted norm independent of alpha", 100,
       alpha_independence},
      {"amemiya_sandwich", "luxemburg <= amemiya <= 2 luxemburg", 200, amemiya_sandwich},
      {"conjugate_involution", "double conjugate returns phi on a 64-point grid", 7,
       conjugate_involution},
      {"contraction_inequality", "tau(phi(z*xz)) <= tau(z*phi(x)z) for contractions z", 200,
       contraction_inequality},
      {"convexity", "phi convex on random pairs", 500, convexity},
      {"counterexample_exactness", "mu,nu modular equals sum of 1/i^2", 3,
       counterexample_exactness},
      {"counterexample_separation", "mu,mu modular dominates the harmonic sum", 1,
       counterexample_separation},
      {"definiteness", "norm vanishes exactly at zero", 200, definiteness},
      {"diagonal_monotonicity", "norm monotone in the modulus", 200, diagonal_monotonicity},
      {"dual_commuting_reduction", "ascent matches the diagonal solution", 50,
       dual_commuting_reduction},
      {"dual_diag_amemiya", "diagonal dual norm equals the amemiya norm of psi", 100,
       dual_diag_amemiya},
      {"dual_matrix_gap", "ascent within 5% of the upper bound for phi_2", 50, dual_matrix_gap},
      {"dual_search_sandwich", "luxemburg(psi) <= dual <= 2 luxemburg(psi)", 100,
       dual_search_sandwich},
      {"holder_bound", "|tau(xy)| <= ||x||_phi ||y||_psi", 200, holder_bound},
      {"homogeneity", "||cx|| = |c| ||x||", 200, homogeneity},
      {"inverse_roundtrip", "phi^{-1}(phi(t)) = t", 200, inverse_roundtrip},
      {"isometry", "weighted norm equals luxemburg norm of U(x)", 100, isometry},
      {"lemma1", "lambda O(x) >= O(lambda x)", 200, lemma1},
      {"lp_collapse", "power N-functions give scaled Lp norms", 100, lp_collapse},
      {"modular_at_norm", "modular of x / ||x|| is 1", 200, modular_at_norm},
      {"modular_convexity", "modular convex", 200, modular_convexity},
      {"polar_reconstruction", "x = u|x| with u a partial isometry", 200, polar_reconstruction},
      {"reflexivity", "bidual norm equals norm", 100, reflexivity},
      {"trace_cyclicity", "tau(xy) = tau(yx)", 200, trace_cyclicity},
      {"trace_monotonicity", "x <= y => tau(phi(x)) <= tau(phi(y))", 200, trace_monotonicity},
      {"triangle", "triangle inequality", 200, triangle},
      {"truncation_convergence", "spectral truncation converges in norm", 50,
       truncation_convergence},
      {"trunov_collapse", "power N-functions give weighted Lp norms", 100, trunov_collapse},
      {"u_inverse_roundtrip", "U^{-1} U = id", 200, u_inverse_roundtrip},
      {"u_linearity", "U is linear", 200, u_linearity},
      {"unitary_invariance", "||uxv|| = ||x||", 200, unitary_invariance},
      {"weighted_convexity", "weighted modular convex", 200, weighted_convexity},
      {"weighted_definiteness", "weighted norm vanishes exactly at zero", 100,
       weighted_definiteness},
      {"young_inequality", "young gap nonnegative, zero at s = p(t)", 1000, young_inequality},
  };
  for (Suite& suite : s) {
    suite.run = [body = std::move(suite.run), fallback = suite.default_count](SuiteParams p) {
      if (p.count <= 0) p.count = fallback;
      return body(p);
    };
  }
  std::sort(s.begin(), s.end(), [](const Suite& a, const Suite& b) { return a.name < b.name; });
  return s;
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> registry = build_registry();
  return registry;
}

const Suite* find_suite(const std::string& name) {
  for (const Suite& s : suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::vector<SuiteResult> run(const RunConfig& config) {
  std::vector<const Suite*> selected;
  if (config.only.empty()) {
    for (const Suite& s : suites()) selected.push_back(&s);
  } else {
    for (const std::string& name : config.only) {
      const Suite* s = find_suite(name);
      if (s == nullptr) throw std::invalid_argument("unknown invariant \"" + name + "\"");
      if (std::find(selected.begin(), selected.end(), s) == selected.end()) selected.push_back(s);
    }
  }
  std::vector<SuiteResult> results(selected.size());
  const auto run_one = [&](std::size_t k) {
    const Suite& s = *selected[k];
    SuiteParams params{config.seed, config.count > 0 ? config.count : s.default_count,
                       config.tol_scale};
    const auto start = std::chrono::steady_clock::now();
    results[k] = s.run(params);
    results[k].seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  const unsigned workers =
      config.parallel ? std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                         static_cast<unsigned>(selected.size())))
                      : 1u;
  if (workers <= 1) {
    for (std::size_t k = 0; k < selected.size(); ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < selected.size(); k = next++) run_one(k);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  std::sort(results.begin(), results.end(),
            [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return results;
}

Json to_json(const SuiteResult& r) {
  Json j = {{"invariant", r.name},
            {"pass", r.passed},
            {"instances", r.instances},
            {"checks", r.checks},
            {"worst_slack", std::isfinite(r.worst_slack) ? Json(r.worst_slack) : Json()}};
  if (r.failure) j["failure"] = *r.failure;
  if (!r.info.empty()) j["info"] = r.info;
  return j;
}

}  // namespace orlicz::proptest
