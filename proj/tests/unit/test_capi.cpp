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
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "orlicz/orlicz.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  orz_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(orz_status_name(ORZ_OK)) == "ok");
  CHECK(std::string(orz_status_name(ORZ_PARSE_ERROR)).size() > 0);
  CHECK(std::strlen(orz_version()) > 0);
  orz_string_free(nullptr);
  orz_nfunction_free(nullptr);
  orz_element_free(nullptr);
  orz_trace_free(nullptr);
  orz_weight_free(nullptr);
}

TEST_CASE("N-function handles") {
  orz_nfunction* phi = nullptr;
  REQUIRE(orz_nfunction_power(2.0, &phi) == ORZ_OK);
  double v = 0.0;
  CHECK(orz_nfunction_eval(phi, 3.0, &v) == ORZ_OK);
  CHECK(v == doctest::Approx(4.5));
  CHECK(orz_nfunction_inverse(phi, 4.5, &v) == ORZ_OK);
  CHECK(v == doctest::Approx(3.0));
  v = -1.0;
  CHECK(orz_nfunction_inverse(phi, -1.0, &v) == ORZ_DOMAIN_ERROR);
  CHECK(v == -1.0);
  CHECK(std::string(orz_last_error()).size() > 0);
  orz_nfunction* psi = nullptr;
  REQUIRE(orz_nfunction_conjugate(phi, &psi) == ORZ_OK);
  CHECK(orz_nfunction_eval(psi, 2.0, &v) == ORZ_OK);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
  char* text = nullptr;
  REQUIRE(orz_nfunction_to_json(phi, &text) == ORZ_OK);
  CHECK(take(text).find("power") != std::string::npos);
  orz_nfunction* bad = nullptr;
  CHECK(orz_nfunction_power(0.5, &bad) == ORZ_DOMAIN_ERROR);
  CHECK(bad == nullptr);
  CHECK(orz_nfunction_from_json("{", &bad) == ORZ_PARSE_ERROR);
  CHECK(orz_nfunction_eval(nullptr, 1.0, &v) == ORZ_INVALID_ARGUMENT);
  CHECK(orz_nfunction_eval(phi, 1.0, nullptr) == ORZ_INVALID_ARGUMENT);
  const double s[] = {0.0, 1.0, 2.0};
  const double p[] = {0.0, 1.0, 3.0};
  orz_nfunction* table = nullptr;
  CHECK(orz_nfunction_table(s, p, 3, &table) == ORZ_OK);
  CHECK(orz_nfunction_eval(table, 2.0, &v) == ORZ_OK);
  CHECK(v == doctest::Approx(2.5));
  double grid[40];
  for (int k = 0; k < 40; ++k) grid[k] = std::pow(10.0, -6.0 + 0.25 * k);
  int sat = 0;
  double r = 0.0;
  CHECK(orz_nfunction_check_delta2(phi, 2.0, grid, 40, &sat, &r) == ORZ_OK);
  CHECK(sat == 1);
  orz_nfunction_free(table);
  orz_nfunction_free(psi);
  orz_nfunction_free(phi);
}

TEST_CASE("elements, traces and norms") {
  const int dims[] = {2};
  const double re[] = {3.0, 0.0, 0.0, 4.0};
  orz_element* x = nullptr;
  REQUIRE(orz_element_create(dims, 1, re, nullptr, &x) == ORZ_OK);
  int n = 0;
  CHECK(orz_element_total_dimension(x, &n) == ORZ_OK);
  CHECK(n == 2);
  double ev[2];
  CHECK(orz_element_eigenvalues(x, ev, 2) == ORZ_OK);
  CHECK(ev[0] == doctest::Approx(3.0));
  CHECK(orz_element_eigenvalues(x, ev, 1) == ORZ_INVALID_ARGUMENT);
  orz_trace* tau = nullptr;
  REQUIRE(orz_trace_create(x, nullptr, 0, &tau) == ORZ_OK);
  double tr_re = 0.0, tr_im = 0.0;
  CHECK(orz_trace_eval(tau, x, &tr_re, &tr_im) == ORZ_OK);
  CHECK(tr_re == doctest::Approx(7.0));
  orz_nfunction* phi = nullptr;
  REQUIRE(orz_nfunction_power(2.0, &phi) == ORZ_OK);
  double v = 0.0;
  int overflow = 1;
  CHECK(orz_modular(phi, tau, x, &v, &overflow) == ORZ_OK);
  CHECK(v == doctest::Approx(12.5));
  CHECK(overflow == 0);
  CHECK(orz_luxemburg_norm(phi, tau, x, &v) == ORZ_OK);
  CHECK(v == doctest::Approx(5.0 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(orz_lp_norm(tau, x, 2.0, &v) == ORZ_OK);
  CHECK(v == doctest::Approx(5.0));
  double lower = 0.0, upper = 0.0;
  CHECK(orz_dual_norm(phi, tau, x, &lower, &upper) == ORZ_OK);
  CHECK(upper == doctest::Approx(5.0 * std::sqrt(2.0)).epsilon(1e-8));
  const double w[] = {1.0};
  orz_trace* bad_tau = nullptr;
  CHECK(orz_trace_create(x, w, 1, &bad_tau) == ORZ_OK);
  orz_trace_free(bad_tau);
  const double w2[] = {1.0, 2.0};
  CHECK(orz_trace_create(x, w2, 2, &bad_tau) == ORZ_SHAPE_ERROR);
  orz_element* y = nullptr;
  CHECK(orz_element_from_json(R"({"dims":[3],"blocks":[[1,0,0,0,1,0,0,0,1]]})", &y) == ORZ_OK);
  CHECK(orz_luxemburg_norm(phi, tau, y, &v) == ORZ_SHAPE_ERROR);
  orz_element* z = nullptr;
  CHECK(orz_element_from_json(R"({"dims":[2]})", &z) == ORZ_PARSE_ERROR);
  char* text = nullptr;
  REQUIRE(orz_report_norm(phi, tau, x, nullptr, 2.0, &text) == ORZ_OK);
  const std::string report = take(text);
  CHECK(report.find("\"luxemburg\"") != std::string::npos);
  CHECK(report.find("\"lp\"") != std::string::npos);
  orz_element_free(y);
  orz_nfunction_free(phi);
  orz_trace_free(tau);
  orz_element_free(x);
}

TEST_CASE("weights and isometry report") {
  orz_element* h = nullptr;
  REQUIRE(orz_element_from_json(R"({"dims":[2],"blocks":[[2,0,0,5]]})", &h) == ORZ_OK);
  orz_element* x = nullptr;
  REQUIRE(orz_element_from_json(R"({"dims":[2],"blocks":[[[1,1],[0,2],[1,0],[-1,0]]]})", &x) ==
          ORZ_OK);
  orz_weight* w = nullptr;
  REQUIRE(orz_weight_create(h, 0.3, &w) == ORZ_OK);
  orz_weight* bad = nullptr;
  CHECK(orz_weight_create(h, 2.0, &bad) == ORZ_DOMAIN_ERROR);
  orz_trace* tau = nullptr;
  REQUIRE(orz_trace_create(x, nullptr, 0, &tau) == ORZ_OK);
  orz_nfunction* phi = nullptr;
  REQUIRE(orz_nfunction_log_power(2.0, &phi) == ORZ_OK);
  char* text = nullptr;
  int passed = 0;
  REQUIRE(orz_report_isometry(phi, tau, w, x, 1e-10, &text, &passed) == ORZ_OK);
  CHECK(passed == 1);
  CHECK(take(text).find("\"pass\":true") != std::string::npos);
  orz_element* u = nullptr;
  orz_element* back = nullptr;
  REQUIRE(orz_u_map(phi, w, x, &u) == ORZ_OK);
  REQUIRE(orz_u_inverse(phi, w, u, &back) == ORZ_OK);
  double nw = 0.0, nl = 0.0;
  CHECK(orz_weighted_norm(phi, w, tau, x, &nw) == ORZ_OK);
  CHECK(orz_luxemburg_norm(phi, tau, u, &nl) == ORZ_OK);
  CHECK(nw == doctest::Approx(nl).epsilon(1e-10));
  orz_element_free(back);
  orz_element_free(u);
  orz_nfunction_free(phi);
  orz_trace_free(tau);
  orz_weight_free(w);
  orz_element_free(x);
  orz_element_free(h);
}

TEST_CASE("counterexample and proptest entry points") {
  double a = 0.0, b = 0.0;
  CHECK(orz_counterexample_modulars(2.0, 5, &a, &b) == ORZ_OK);
  CHECK(a == doctest::Approx(0.4636111111).epsilon(1e-9));
  CHECK(orz_counterexample_modulars(0.5, 5, &a, &b) == ORZ_DOMAIN_ERROR);
  char* text = nullptr;
  REQUIRE(orz_report_counterexample(2.0, 4, &text) == ORZ_OK);
  CHECK(take(text).find("\"notes\"") != std::string::npos);
  int all = 0;
  REQUIRE(orz_proptest_run(1, 3, 1.0, "triangle,homogeneity", 0, &text, &all) == ORZ_OK);
  CHECK(all == 1);
  CHECK(take(text).find("\"summary\"") != std::string::npos);
  CHECK(orz_proptest_run(1, 3, 1.0, "bogus", 0, &text, &all) == ORZ_INVALID_ARGUMENT);
  REQUIRE(orz_proptest_list(&text) == ORZ_OK);
  CHECK(take(text).find("triangle\t") != std::string::npos);
}
