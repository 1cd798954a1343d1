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
#include "orlicz/orlicz.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/algebra.hpp"
#include "orlicz/counterexample.hpp"
#include "orlicz/duality.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/io.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/proptest.hpp"
#include "orlicz/weighted.hpp"

struct orz_nfunction {
  orlicz::NFunction value;
};
struct orz_element {
  orlicz::BlockElement value;
};
struct orz_trace {
  orlicz::TraceSpec value;
};
struct orz_weight {
  orlicz::WeightSpec value;
};

namespace {

using orlicz::io::Json;

thread_local std::string last_error;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
const T& require(const T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " must not be NULL");
  return *p;
}

template <class T>
T& require_out(T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " must not be NULL");
  return *p;
}

orz_status fail(orz_status status, const char* message) {
  last_error = message;
  return status;
}

template <class F>
orz_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return ORZ_OK;
  } catch (const orlicz::DomainError& e) {
    return fail(ORZ_DOMAIN_ERROR, e.what());
  } catch (const orlicz::ShapeError& e) {
    return fail(ORZ_SHAPE_ERROR, e.what());
  } catch (const orlicz::ParseError& e) {
    return fail(ORZ_PARSE_ERROR, e.what());
  } catch (const orlicz::NumericError& e) {
    return fail(ORZ_NUMERIC_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ORZ_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ORZ_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ORZ_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ORZ_INTERNAL_ERROR, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string line(const Json& j) { return j.dump() + "\n"; }

Json norm_record(const orlicz::NormResult& r) { return orlicz::io::to_json(r); }

std::vector<std::string> split_names(const char* text) {
  std::vector<std::string> names;
  if (text == nullptr) return names;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return names;
}

}  // namespace

extern "C" {

const char* orz_version(void) { return "0.1.0"; }

const char* orz_last_error(void) { return last_error.c_str(); }

const char* orz_status_name(orz_status status) {
  switch (status) {
    case ORZ_OK:
      return "ok";
    case ORZ_DOMAIN_ERROR:
      return "domain error";
    case ORZ_SHAPE_ERROR:
      return "shape error";
    case ORZ_PARSE_ERROR:
      return "parse error";
    case ORZ_NUMERIC_ERROR:
      return "numeric error";
    case ORZ_INVALID_ARGUMENT:
      return "invalid argument";
    case ORZ_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

void orz_string_free(char* s) { std::free(s); }

// ---------------------------------------------------------------------------
// N-functions

orz_status orz_nfunction_power(double exponent, orz_nfunction** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    o = new orz_nfunction{orlicz::NFunction::power(exponent)};
  });
}

orz_status orz_nfunction_log_power(double beta, orz_nfunction** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    o = new orz_nfunction{orlicz::NFunction::log_power(beta)};
  });
}

orz_status orz_nfunction_table(const double* s, const double* p, size_t count,
                               orz_nfunction** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    if (count > 0) {
      require(s, "s");
      require(p, "p");
    }
    std::vector<orlicz::TableDensity::Point> points;
    for (size_t i = 0; i < count; ++i) points.emplace_back(s[i], p[i]);
    o = new orz_nfunction{orlicz::NFunction::table(std::move(points))};
  });
}

orz_status orz_nfunction_from_json(const char* text, orz_nfunction** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    const Json j = orlicz::io::parse(&require(text, "text"));
    o = new orz_nfunction{orlicz::io::nfunction_from_json(j)};
  });
}

orz_status orz_nfunction_to_json(const orz_nfunction* phi, char** out) {
  return guard([&] {
    const auto& f = require(phi, "phi");
    auto& o = require_out(out, "out");
    o = copy_string(orlicz::io::to_json(f.value).dump());
  });
}

orz_status orz_nfunction_conjugate(const orz_nfunction* phi, orz_nfunction** out) {
  return guard([&] {
    const auto& f = require(phi, "phi");
    auto& o = require_out(out, "out");
    o = new orz_nfunction{f.value.conjugate()};
  });
}

void orz_nfunction_free(orz_nfunction* phi) { delete phi; }

orz_status orz_nfunction_eval(const orz_nfunction* phi, double t, double* out) {
  return guard([&] {
    const auto& f = require(phi, "phi");
    auto& o = require_out(out, "out");
    o = f.value(t);
  });
}

orz_status orz_nfunction_density(const orz_nfunction* phi, double s, double* out) {
  return guard([&] {
    const auto& f = require(phi, "phi");
    auto& o = require_out(out, "out");
    if (!std::isfinite(s) || s < 0.0) throw orlicz::DomainError("density: s must be >= 0");
    o = f.value.density(s);
  });
}

orz_status orz_nfunction_inverse(const orz_nfunction* phi, double y, double* out) {
  return guard([&] {
    const auto& f = require(phi, "phi");
    auto& o = require_out(out, "out");
    o = f.value.inverse(y);
  });
}

orz_status orz_nfunction_young_gap(const orz_nfunction* phi, double t, double s, double* out) {
  return guard([&] {
    const auto& f = require(phi, "phi");
    auto& o = require_out(out, "out");
    o = f.value.young_gap(t, s);
  });
}

orz_status orz_nfunction_check_delta2(const orz_nfunction* phi, double k, const double* grid,
                                      size_t count, int* satisfied, double* r_estimate) {
  return guard([&] {
    const auto& f = require(phi, "phi");
    auto& sat = require_out(satisfied, "satisfied");
    auto& r = require_out(r_estimate, "r_estimate");
    if (count > 0) require(grid, "grid");
    const orlicz::Delta2Estimate e =
        orlicz::check_delta2(f.value, k, std::span<const double>(grid, count));
    sat = e.satisfied ? 1 : 0;
    r = e.r_estimate;
  });
}

// ---------------------------------------------------------------------------
// Elements

orz_status orz_element_create(const int* dims, size_t block_count, const double* re,
                              const double* im, orz_element** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    require(dims, "dims");
    require(re, "re");
    std::vector<int> d(dims, dims + block_count);
    orlicz::BlockShape shape(d);
    std::vector<orlicz::Matrix> blocks;
    size_t offset = 0;
    for (int n : d) {
      orlicz::Matrix m(n, n);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c, ++offset) {
          m(r, c) = {re[offset], im != nullptr ? im[offset] : 0.0};
        }
      }
      blocks.push_back(std::move(m));
    }
    o = new orz_element{orlicz::BlockElement(std::move(shape), std::move(blocks))};
  });
}

orz_status orz_element_from_json(const char* text, orz_element** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    const Json j = orlicz::io::parse(&require(text, "text"));
    o = new orz_element{orlicz::io::element_from_json(j)};
  });
}

orz_status orz_element_to_json(const orz_element* x, char** out) {
  return guard([&] {
    const auto& e = require(x, "x");
    auto& o = require_out(out, "out");
    o = copy_string(orlicz::io::to_json(e.value).dump());
  });
}

void orz_element_free(orz_element* x) { delete x; }

orz_status orz_element_total_dimension(const orz_element* x, int* out) {
  return guard([&] {
    const auto& e = require(x, "x");
    auto& o = require_out(out, "out");
    o = e.value.shape().total_dimension();
  });
}

orz_status orz_element_eigenvalues(const orz_element* x, double* values, size_t capacity) {
  return guard([&] {
    const auto& e = require(x, "x");
    require(values, "values");
    if (capacity < static_cast<size_t>(e.value.shape().total_dimension())) {
      throw InvalidArgument("eigenvalues: capacity below the total dimension");
    }
    size_t i = 0;
    for (const Eigen::VectorXd& v : orlicz::eigenvalues(e.value)) {
      for (Eigen::Index k = 0; k < v.size(); ++k) values[i++] = v(k);
    }
  });
}

orz_status orz_spectral_truncate(const orz_element* x, double lambda, orz_element** out) {
  return guard([&] {
    const auto& e = require(x, "x");
    auto& o = require_out(out, "out");
    o = new orz_element{orlicz::spectral_truncate(e.value, lambda)};
  });
}

// ---------------------------------------------------------------------------
// Traces and weights

orz_status orz_trace_create(const orz_element* shape_of, const double* weights, size_t count,
                            orz_trace** out) {
  return guard([&] {
    const auto& e = require(shape_of, "shape_of");
    auto& o = require_out(out, "out");
    if (weights == nullptr) {
      o = new orz_trace{orlicz::TraceSpec(e.value.shape())};
    } else {
      o = new orz_trace{orlicz::TraceSpec(e.value.shape(),
                                          std::vector<double>(weights, weights + count))};
    }
  });
}

orz_status orz_trace_from_json(const char* text, const orz_element* shape_of, orz_trace** out) {
  return guard([&] {
    const auto& e = require(shape_of, "shape_of");
    auto& o = require_out(out, "out");
    const Json j = orlicz::io::parse(&require(text, "text"));
    o = new orz_trace{orlicz::io::trace_from_json(j, e.value.shape())};
  });
}

void orz_trace_free(orz_trace* tau) { delete tau; }

orz_status orz_trace_eval(const orz_trace* tau, const orz_element* x, double* re, double* im) {
  return guard([&] {
    const auto& t = require(tau, "tau");
    const auto& e = require(x, "x");
    auto& r = require_out(re, "re");
    auto& i = require_out(im, "im");
    const orlicz::Complex v = orlicz::trace(t.value, e.value);
    r = v.real();
    i = v.imag();
  });
}

orz_status orz_weight_create(const orz_element* h, double alpha, orz_weight** out) {
  return guard([&] {
    const auto& e = require(h, "h");
    auto& o = require_out(out, "out");
    o = new orz_weight{orlicz::WeightSpec(e.value, alpha)};
  });
}

orz_status orz_weight_from_json(const char* text, int has_alpha, double alpha,
                                orz_weight** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    const Json j = orlicz::io::parse(&require(text, "text"));
    std::optional<double> override_alpha;
    if (has_alpha != 0) override_alpha = alpha;
    o = new orz_weight{orlicz::io::weight_from_json(j, override_alpha)};
  });
}

void orz_weight_free(orz_weight* w) { delete w; }

// ---------------------------------------------------------------------------
// Modulars and norms

orz_status orz_modular(const orz_nfunction* phi, const orz_trace* tau, const orz_element* x,
                       double* out, int* overflow) {
  return guard([&] {
    const orlicz::ModularValue m =
        orlicz::modular(require(phi, "phi").value, require(tau, "tau").value,
                        require(x, "x").value);
    require_out(out, "out") = m.value;
    if (overflow != nullptr) *overflow = m.overflow ? 1 : 0;
  });
}

orz_status orz_luxemburg_norm(const orz_nfunction* phi, const orz_trace* tau,
                              const orz_element* x, double* out) {
  return guard([&] {
    const double v = orlicz::luxemburg_norm(require(phi, "phi").value, require(tau, "tau").value,
                                            require(x, "x").value)
                         .value;
    require_out(out, "out") = v;
  });
}

orz_status orz_amemiya_norm(const orz_nfunction* phi, const orz_trace* tau,
                            const orz_element* x, double* out) {
  return guard([&] {
    const double v = orlicz::amemiya_norm(require(phi, "phi").value, require(tau, "tau").value,
                                          require(x, "x").value);
    require_out(out, "out") = v;
  });
}

orz_status orz_lp_norm(const orz_trace* tau, const orz_element* x, double p, double* out) {
  return guard([&] {
    const double v = orlicz::lp_norm(require(tau, "tau").value, require(x, "x").value, p);
    require_out(out, "out") = v;
  });
}

// ---------------------------------------------------------------------------
// Weighted spaces

orz_status orz_u_map(const orz_nfunction* phi, const orz_weight* w, const orz_element* x,
                     orz_element** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    o = new orz_element{orlicz::u_map(require(phi, "phi").value, require(w, "w").value,
                                      require(x, "x").value)};
  });
}

orz_status orz_u_inverse(const orz_nfunction* phi, const orz_weight* w, const orz_element* y,
                         orz_element** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    o = new orz_element{orlicz::u_inverse(require(phi, "phi").value, require(w, "w").value,
                                          require(y, "y").value)};
  });
}

orz_status orz_weighted_modular(const orz_nfunction* phi, const orz_weight* w,
                                const orz_trace* tau, const orz_element* x, double* out) {
  return guard([&] {
    const double v =
        orlicz::weighted_modular(require(phi, "phi").value, require(w, "w").value,
                                 require(tau, "tau").value, require(x, "x").value)
            .value;
    require_out(out, "out") = v;
  });
}

orz_status orz_weighted_norm(const orz_nfunction* phi, const orz_weight* w,
                             const orz_trace* tau, const orz_element* x, double* out) {
  return guard([&] {
    const double v = orlicz::weighted_norm(require(phi, "phi").value, require(w, "w").value,
                                           require(tau, "tau").value, require(x, "x").value)
                         .value;
    require_out(out, "out") = v;
  });
}

orz_status orz_lemma1_gap(const orz_nfunction* phi, const orz_weight* w, const orz_trace* tau,
                          const orz_element* x, double lambda, double* out) {
  return guard([&] {
    const double v = orlicz::lemma1_gap(require(phi, "phi").value, require(w, "w").value,
                                        require(tau, "tau").value, require(x, "x").value,
                                        lambda);
    require_out(out, "out") = v;
  });
}

orz_status orz_trunov_lp_norm(const orz_trace* tau, const orz_element* h, const orz_element* x,
                              double p, double alpha, double* out) {
  return guard([&] {
    const double v = orlicz::trunov_lp_norm(require(tau, "tau").value, require(h, "h").value,
                                            require(x, "x").value, p, alpha);
    require_out(out, "out") = v;
  });
}

// ---------------------------------------------------------------------------
// Duality

orz_status orz_pairing(const orz_trace* tau, const orz_element* x, const orz_element* y,
                       double* re, double* im) {
  return guard([&] {
    const orlicz::Complex v =
        orlicz::pairing(require(tau, "tau").value, require(x, "x").value, require(y, "y").value);
    auto& r = require_out(re, "re");
    auto& i = require_out(im, "im");
    r = v.real();
    i = v.imag();
  });
}

namespace {

orlicz::DualNormEstimate dual_estimate(const orlicz::NFunction& phi,
                                       const orlicz::TraceSpec& tau,
                                       const orlicz::BlockElement& y) {
  if (y.shape().is_commutative()) return orlicz::dual_norm_diag(phi, tau, y);
  return orlicz::dual_norm_search(phi, tau, y);
}

}  // namespace

orz_status orz_dual_norm(const orz_nfunction* phi, const orz_trace* tau, const orz_element* y,
                         double* lower, double* upper) {
  return guard([&] {
    auto& lo = require_out(lower, "lower");
    auto& hi = require_out(upper, "upper");
    const orlicz::DualNormEstimate d =
        dual_estimate(require(phi, "phi").value, require(tau, "tau").value,
                      require(y, "y").value);
    lo = d.lower;
    hi = d.upper;
  });
}

orz_status orz_bidual_norm_diag(const orz_nfunction* phi, const orz_trace* tau,
                                const orz_element* x, double* out) {
  return guard([&] {
    const double v = orlicz::bidual_norm_diag(require(phi, "phi").value,
                                              require(tau, "tau").value, require(x, "x").value);
    require_out(out, "out") = v;
  });
}

orz_status orz_counterexample_modulars(double beta, int n, double* mu_nu, double* mu_mu) {
  return guard([&] {
    auto& a = require_out(mu_nu, "mu_nu");
    auto& b = require_out(mu_mu, "mu_mu");
    const orlicz::ExampleData data = orlicz::build_example(beta, n);
    a = orlicz::modular_mu_nu(data, n);
    b = orlicz::modular_mu_mu(data, n);
  });
}

// ---------------------------------------------------------------------------
// Reports

orz_status orz_report_norm(const orz_nfunction* phi, const orz_trace* tau, const orz_element* x,
                           const orz_weight* w, double lp, char** out) {
  return guard([&] {
    const auto& f = require(phi, "phi").value;
    const auto& t = require(tau, "tau").value;
    const auto& e = require(x, "x").value;
    auto& o = require_out(out, "out");
    Json j = {{"phi", orlicz::io::to_json(f)},
              {"luxemburg", norm_record(orlicz::luxemburg_norm(f, t, e))},
              {"amemiya", orlicz::amemiya_norm(f, t, e)},
              {"modular", orlicz::modular(f, t, e).value}};
    if (lp > 0.0) {
      j["lp"] = orlicz::lp_norm(t, e, lp);
      j["p"] = lp;
    }
    if (w != nullptr) {
      j["weighted"] = norm_record(orlicz::weighted_norm(f, w->value, t, e));
      j["alpha"] = w->value.alpha();
    }
    o = copy_string(line(j));
  });
}

orz_status orz_report_conjugate(const orz_nfunction* phi, double t_lo, double t_hi, int points,
                                char** out) {
  return guard([&] {
    const auto& f = require(phi, "phi").value;
    auto& o = require_out(out, "out");
    if (!(t_lo > 0.0) || !(t_hi > t_lo) || !std::isfinite(t_hi) || points < 2) {
      throw orlicz::DomainError("conjugate report: need 0 < t_lo < t_hi and points >= 2");
    }
    const orlicz::NFunction psi = f.conjugate();
    const std::vector<double> delta_grid = orlicz::log_grid(1e-6, 1e2, 10);
    const orlicz::Delta2Estimate d2 = orlicz::check_delta2(f, 2.0, delta_grid);
    const orlicz::Delta2Estimate d2c = orlicz::check_delta2(psi, 2.0, delta_grid);
    std::string text = line({{"phi", orlicz::io::to_json(f)},
                             {"conjugate", orlicz::io::to_json(psi)},
                             {"delta2", {{"k", 2.0},
                                         {"phi", {{"satisfied", d2.satisfied},
                                                  {"r_estimate", d2.r_estimate}}},
                                         {"conjugate", {{"satisfied", d2c.satisfied},
                                                        {"r_estimate", d2c.r_estimate}}}}}});
    for (int k = 0; k < points; ++k) {
      const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(k) / (points - 1));
      const double p = f.density(t);
      text += line({{"t", t},
                    {"phi", f(t)},
                    {"density", p},
                    {"psi", psi(t)},
                    {"conjugate_density", psi.density(t)},
                    {"young_gap_at_density", f.young_gap(t, p)}});
    }
    o = copy_string(text);
  });
}

orz_status orz_report_dual(const orz_nfunction* phi, const orz_trace* tau, const orz_element* y,
                           char** out) {
  return guard([&] {
    const auto& f = require(phi, "phi").value;
    const auto& t = require(tau, "tau").value;
    const auto& e = require(y, "y").value;
    auto& o = require_out(out, "out");
    const orlicz::NFunction psi = f.conjugate();
    const orlicz::DualNormEstimate d = dual_estimate(f, t, e);
    const Json j = {{"lower", d.lower},
                    {"upper", d.upper},
                    {"luxemburg", orlicz::luxemburg_norm(psi, t, e).value},
                    {"amemiya", orlicz::amemiya_norm(psi, t, e)},
                    {"method", e.shape().is_commutative() ? "diagonal" : "search"},
                    {"converged", d.converged}};
    o = copy_string(line(j));
  });
}

orz_status orz_report_isometry(const orz_nfunction* phi, const orz_trace* tau,
                               const orz_weight* w, const orz_element* x, double tol,
                               char** out, int* passed) {
  return guard([&] {
    const auto& f = require(phi, "phi").value;
    const auto& t = require(tau, "tau").value;
    const auto& ws = require(w, "w").value;
    const auto& e = require(x, "x").value;
    auto& o = require_out(out, "out");
    auto& ok = require_out(passed, "passed");
    if (!(tol >= 0.0)) throw orlicz::DomainError("isometry report: tol must be >= 0");
    const orlicz::WeightedSpace space(f, ws, t);
    const orlicz::NormResult weighted = space.norm(e);
    const orlicz::NormResult direct = orlicz::luxemburg_norm(f, t, space.u_map(e));
    const double diff = std::abs(weighted.value - direct.value);
    const bool pass = diff <= tol * weighted.value;
    const Json j = {{"alpha", ws.alpha()},
                    {"weighted", norm_record(weighted)},
                    {"luxemburg_of_u", norm_record(direct)},
                    {"difference", diff},
                    {"tol", tol},
                    {"pass", pass}};
    o = copy_string(line(j));
    ok = pass ? 1 : 0;
  });
}

orz_status orz_report_counterexample(double beta, int n_max, char** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    const orlicz::ExampleData data = orlicz::build_example(beta, n_max);
    std::string text;
    for (const orlicz::CounterexampleRow& r : orlicz::counterexample_table(data)) {
      text += line({{"n", r.n},
                    {"modular_mu_nu", r.modular_mu_nu},
                    {"modular_mu_mu", r.modular_mu_mu},
                    {"modular_mu_mu_lower", r.modular_mu_mu_lower},
                    {"norm_mu_nu", r.norm_mu_nu},
                    {"norm_mu_mu", r.norm_mu_mu},
                    {"ratio", r.ratio}});
    }
    text += line({{"beta", beta}, {"n_max", n_max}, {"notes", orlicz::counterexample_notes()}});
    o = copy_string(text);
  });
}

orz_status orz_proptest_run(uint64_t seed, int count, double tol_scale, const char* only,
                            int parallel, char** out, int* all_passed) {
  return guard([&] {
    auto& o = require_out(out, "out");
    auto& ok = require_out(all_passed, "all_passed");
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) {
      throw orlicz::DomainError("proptest: tolerance scale must be positive");
    }
    orlicz::proptest::RunConfig config;
    config.seed = seed;
    config.count = count;
    config.tol_scale = tol_scale;
    config.only = split_names(only);
    config.parallel = parallel != 0;
    const std::vector<orlicz::proptest::SuiteResult> results = orlicz::proptest::run(config);
    std::string text;
    int failed = 0;
    for (const auto& r : results) {
      text += line(orlicz::proptest::to_json(r));
      if (!r.passed) ++failed;
    }
    text += line({{"summary",
                   {{"seed", seed},
                    {"suites", results.size()},
                    {"failed", failed},
                    {"pass", failed == 0}}}});
    o = copy_string(text);
    ok = failed == 0 ? 1 : 0;
  });
}

orz_status orz_proptest_list(char** out) {
  return guard([&] {
    auto& o = require_out(out, "out");
    std::string text;
    for (const auto& s : orlicz::proptest::suites()) {
      text += s.name + "\t" + std::to_string(s.default_count) + "\t" + s.description + "\n";
    }
    o = copy_string(text);
  });
}

}  // extern "C"
