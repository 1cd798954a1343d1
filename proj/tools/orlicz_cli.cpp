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

// Command-line front end. Talks to the library through the C interface only.
//
// Exit codes: 0 success, 1 invariant or check failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/orlicz.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(orz_status status) {
  switch (status) {
    case ORZ_OK:
      return kExitOk;
    case ORZ_DOMAIN_ERROR:
    case ORZ_SHAPE_ERROR:
    case ORZ_PARSE_ERROR:
    case ORZ_INVALID_ARGUMENT:
      return kExitInput;
    default:
      return kExitFailure;
  }
}

void check(orz_status status, const std::string& context) {
  if (status != ORZ_OK) {
    throw CliError{exit_code_for(status), context + ": " + orz_last_error()};
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using NFunctionPtr = std::unique_ptr<orz_nfunction, Deleter<orz_nfunction, orz_nfunction_free>>;
using ElementPtr = std::unique_ptr<orz_element, Deleter<orz_element, orz_element_free>>;
using TracePtr = std::unique_ptr<orz_trace, Deleter<orz_trace, orz_trace_free>>;
using WeightPtr = std::unique_ptr<orz_weight, Deleter<orz_weight, orz_weight_free>>;

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  orz_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitInput, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --phi accepts a JSON record, a file holding one, or the shorthands
// power:<p> and logpower:<beta>.
std::string phi_text(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return spec;
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string value = spec.substr(colon + 1);
    Json j;
    try {
      if (kind == "power") {
        j = {{"kind", "power"}, {"p", std::stod(value)}};
      } else if (kind == "logpower") {
        j = {{"kind", "logpower"}, {"beta", std::stod(value)}};
      }
    } catch (const std::exception&) {
      throw CliError{kExitInput, "--phi: bad number in \"" + spec + "\""};
    }
    if (!j.is_null()) return j.dump();
  }
  return read_file(spec);
}

NFunctionPtr load_phi(const std::string& spec) {
  orz_nfunction* phi = nullptr;
  check(orz_nfunction_from_json(phi_text(spec).c_str(), &phi), "--phi");
  return NFunctionPtr(phi);
}

ElementPtr load_element(const std::string& path) {
  orz_element* x = nullptr;
  check(orz_element_from_json(read_file(path).c_str(), &x), path);
  return ElementPtr(x);
}

TracePtr load_trace(const std::string& path, const orz_element* shape_of) {
  orz_trace* tau = nullptr;
  if (path.empty()) {
    check(orz_trace_create(shape_of, nullptr, 0, &tau), "trace");
  } else {
    check(orz_trace_from_json(read_file(path).c_str(), shape_of, &tau), path);
  }
  return TracePtr(tau);
}

WeightPtr load_weight(const std::string& path, std::optional<double> alpha) {
  orz_weight* w = nullptr;
  check(orz_weight_from_json(read_file(path).c_str(), alpha ? 1 : 0, alpha.value_or(0.0), &w),
        path);
  return WeightPtr(w);
}

std::vector<Json> parse_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row)) {
    if (!row.empty()) out.push_back(Json::parse(row));
  }
  return out;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string counterexample_table(const std::string& text) {
  std::ostringstream os;
  os << "  n  modular_mu_nu  modular_mu_mu_lower  norm_mu_nu  norm_mu_mu       ratio\n";
  for (const Json& r : parse_lines(text)) {
    if (r.contains("notes")) {
      os << "beta = " << r["beta"].get<double>() << ", n_max = " << r["n_max"].get<int>() << "\n";
      for (const auto& note : r["notes"]) os << "note: " << note.get<std::string>() << "\n";
      continue;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%3d  %13.10f  %19.10f  %10.6f  %10.6f  %10.6f\n",
                  r["n"].get<int>(), r["modular_mu_nu"].get<double>(),
                  r["modular_mu_mu_lower"].get<double>(), r["norm_mu_nu"].get<double>(),
                  r["norm_mu_mu"].get<double>(), r["ratio"].get<double>());
    os << buf;
  }
  return os.str();
}

std::string proptest_table(const std::string& text) {
  std::ostringstream os;
  for (const Json& r : parse_lines(text)) {
    if (r.contains("summary")) {
      const Json& s = r["summary"];
      os << (s["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << s["suites"].get<int>()
         << " suites, " << s["failed"].get<int>() << " failed, seed " << s["seed"].dump()
         << "\n";
      continue;
    }
    char buf[200];
    const std::string slack =
        r["worst_slack"].is_null() ? std::string("-") : fmt("%.3e", r["worst_slack"].get<double>());
    std::snprintf(buf, sizeof buf, "%-4s  %-26s %6d instances  worst slack %s\n",
                  r["pass"].get<bool>() ? "ok" : "FAIL", r["invariant"].get<std::string>().c_str(),
                  r["instances"].get<int>(), slack.c_str());
    os << buf;
    if (r.contains("failure")) os << "      failure: " << r["failure"].dump() << "\n";
  }
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError{kExitInput, "cannot write " + out_path};
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Orlicz space computations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to this path instead of stdout");

  std::string phi_spec = R"({"kind":"power","p":2})";
  std::string trace_path;
  std::string weight_path;
  std::optional<double> alpha;
  std::string matrix_path;
  double tol = 1e-10;
  bool table = false;

  auto* norm = app.add_subcommand("norm", "Luxemburg, Amemiya, Lp and weighted norms");
  norm->add_option("matrix", matrix_path, "Element record")->required();
  norm->add_option("--phi", phi_spec, "N-function record, file, power:<p> or logpower:<beta>");
  norm->add_option("--trace", trace_path, "Trace record (default: standard trace)");
  norm->add_option("--weight", weight_path, "Weight record; adds the weighted norm");
  norm->add_option("--alpha", alpha, "Override the weight's alpha")->check(CLI::Range(0.0, 1.0));
  double lp = 0.0;
  norm->add_option("--lp", lp, "Also report the Lp norm for this p")
      ->check(CLI::Range(1.0, 1e300));

  auto* conj = app.add_subcommand("conjugate", "Complementary N-function and growth check");
  conj->add_option("--phi", phi_spec, "N-function record, file, power:<p> or logpower:<beta>");
  double t_lo = 1e-2;
  double t_hi = 1e2;
  int points = 9;
  conj->add_option("--t-lo", t_lo, "Smallest sample point");
  conj->add_option("--t-hi", t_hi, "Largest sample point");
  conj->add_option("--points", points, "Number of log-spaced samples")
      ->check(CLI::Range(2, 100000));

  auto* dual = app.add_subcommand("dual", "Norm of the functional x -> tau(xy)");
  dual->add_option("matrix", matrix_path, "Element record for y")->required();
  dual->add_option("--phi", phi_spec, "N-function record, file, power:<p> or logpower:<beta>");
  dual->add_option("--trace", trace_path, "Trace record (default: standard trace)");

  auto* iso = app.add_subcommand("isometry-check", "Compare the weighted norm with |U(x)|");
  iso->add_option("matrix", matrix_path, "Element record for x")->required();
  iso->add_option("--phi", phi_spec, "N-function record, file, power:<p> or logpower:<beta>");
  iso->add_option("--trace", trace_path, "Trace record (default: standard trace)");
  iso->add_option("--weight", weight_path, "Weight record")->required();
  iso->add_option("--alpha", alpha, "Override the weight's alpha")->check(CLI::Range(0.0, 1.0));
  iso->add_option("--tol", tol, "Relative tolerance")->check(CLI::NonNegativeNumber);

  auto* ce = app.add_subcommand("counterexample", "Two non-equivalent weighted norms");
  double beta = 2.0;
  int n_max = 10;
  ce->add_option("--beta", beta, "Log-power exponent (> 1)");
  ce->add_option("--n-max", n_max, "Largest index (2..64)")->check(CLI::Range(2, 64));
  ce->add_flag("--table", table, "Human-readable table instead of records");

  auto* prop = app.add_subcommand("proptest", "Randomized invariant suites");
  std::uint64_t seed = 1;
  int count = 0;
  double tol_scale = 1.0;
  std::vector<std::string> only;
  bool serial = false;
  bool list = false;
  prop->add_option("--seed", seed, "Run seed");
  prop->add_option("--count", count, "Instances per suite (default: per-suite)")
      ->check(CLI::Range(1, 1000000));
  prop->add_option("--tol", tol_scale, "Scale every tolerance by this factor")
      ->check(CLI::PositiveNumber);
  prop->add_option("--only", only, "Run only these suites")->delimiter(',');
  prop->add_flag("--serial", serial, "Run suites one after another");
  prop->add_flag("--list", list, "List suites and exit");
  prop->add_flag("--table", table, "Human-readable table instead of records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    int status = kExitOk;
    char* raw = nullptr;
    std::string text;
    if (*norm) {
      const ElementPtr x = load_element(matrix_path);
      const NFunctionPtr phi = load_phi(phi_spec);
      const TracePtr tau = load_trace(trace_path, x.get());
      WeightPtr w;
      if (!weight_path.empty()) w = load_weight(weight_path, alpha);
      check(orz_report_norm(phi.get(), tau.get(), x.get(), w.get(), lp, &raw), "norm");
      text = take(raw);
    } else if (*conj) {
      const NFunctionPtr phi = load_phi(phi_spec);
      check(orz_report_conjugate(phi.get(), t_lo, t_hi, points, &raw), "conjugate");
      text = take(raw);
    } else if (*dual) {
      const ElementPtr y = load_element(matrix_path);
      const NFunctionPtr phi = load_phi(phi_spec);
      const TracePtr tau = load_trace(trace_path, y.get());
      check(orz_report_dual(phi.get(), tau.get(), y.get(), &raw), "dual");
      text = take(raw);
    } else if (*iso) {
      const ElementPtr x = load_element(matrix_path);
      const NFunctionPtr phi = load_phi(phi_spec);
      const TracePtr tau = load_trace(trace_path, x.get());
      const WeightPtr w = load_weight(weight_path, alpha);
      int passed = 0;
      check(orz_report_isometry(phi.get(), tau.get(), w.get(), x.get(), tol, &raw, &passed),
            "isometry-check");
      text = take(raw);
      if (passed == 0) status = kExitFailure;
    } else if (*ce) {
      check(orz_report_counterexample(beta, n_max, &raw), "counterexample");
      text = take(raw);
      if (table) text = counterexample_table(text);
    } else if (*prop) {
      if (list) {
        check(orz_proptest_list(&raw), "proptest");
        text = take(raw);
      } else {
        std::string joined;
        for (const std::string& name : only) joined += (joined.empty() ? "" : ",") + name;
        int all_passed = 0;
        check(orz_proptest_run(seed, count, tol_scale, joined.c_str(), serial ? 0 : 1, &raw,
                               &all_passed),
              "proptest");
        text = take(raw);
        if (table) text = proptest_table(text);
        if (all_passed == 0) status = kExitFailure;
      }
    }
    emit(text, out_path);
    return status;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
