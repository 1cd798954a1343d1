/* Copyright 2026 The ncorlicz Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef ORLICZ_ORLICZ_H
#define ORLICZ_ORLICZ_H

/* C interface to the ncorlicz library.
 *
 * Every object is an opaque handle released with its _free function; free
 * functions accept NULL. Functions return an orz_status and write results
 * through out-parameters, which are left untouched on failure. The message
 * of the most recent failure on the calling thread is available from
 * orz_last_error(). Strings returned through char** are owned by the caller
 * and released with orz_string_free().
 *
 * Text records use the JSON layouts
 *   N-function  {"kind":"power","p":2} | {"kind":"logpower","beta":2}
 *               | {"kind":"table","points":[[s,p],...]}
 *               | {"kind":"conjugate","of":<N-function>}
 *   element     {"dims":[2,1],"blocks":[[[re,im],...],[...]]}
 *   trace       {"weights":[w1,...]}
 *   weight      {"h":<element>,"alpha":0.5}
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ORLICZ_BUILDING_LIBRARY)
#define ORZ_API __declspec(dllexport)
#else
#define ORZ_API __declspec(dllimport)
#endif
#else
#define ORZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orz_status {
  ORZ_OK = 0,
  ORZ_DOMAIN_ERROR = 1,   /* argument outside the mathematical domain */
  ORZ_SHAPE_ERROR = 2,    /* block shapes disagree */
  ORZ_PARSE_ERROR = 3,    /* malformed text record */
  ORZ_NUMERIC_ERROR = 4,  /* root finding or overflow failure */
  ORZ_INVALID_ARGUMENT = 5,
  ORZ_INTERNAL_ERROR = 6
} orz_status;

typedef struct orz_nfunction orz_nfunction;
typedef struct orz_element orz_element;
typedef struct orz_trace orz_trace;
typedef struct orz_weight orz_weight;

ORZ_API const char* orz_version(void);
ORZ_API const char* orz_last_error(void);
ORZ_API const char* orz_status_name(orz_status status);
ORZ_API void orz_string_free(char* s);

/* N-functions */
ORZ_API orz_status orz_nfunction_power(double exponent, orz_nfunction** out);
ORZ_API orz_status orz_nfunction_log_power(double beta, orz_nfunction** out);
ORZ_API orz_status orz_nfunction_table(const double* s, const double* p, size_t count,
                                       orz_nfunction** out);
ORZ_API orz_status orz_nfunction_from_json(const char* text, orz_nfunction** out);
ORZ_API orz_status orz_nfunction_to_json(const orz_nfunction* phi, char** out);
ORZ_API orz_status orz_nfunction_conjugate(const orz_nfunction* phi, orz_nfunction** out);
ORZ_API void orz_nfunction_free(orz_nfunction* phi);
ORZ_API orz_status orz_nfunction_eval(const orz_nfunction* phi, double t, double* out);
ORZ_API orz_status orz_nfunction_density(const orz_nfunction* phi, double s, double* out);
ORZ_API orz_status orz_nfunction_inverse(const orz_nfunction* phi, double y, double* out);
ORZ_API orz_status orz_nfunction_young_gap(const orz_nfunction* phi, double t, double s,
                                           double* out);
ORZ_API orz_status orz_nfunction_check_delta2(const orz_nfunction* phi, double k,
                                              const double* grid, size_t count,
                                              int* satisfied, double* r_estimate);

/* Elements of a direct sum of matrix blocks. `re` and `im` hold the blocks
 * one after another, each row-major; `im` may be NULL for real input. */
ORZ_API orz_status orz_element_create(const int* dims, size_t block_count, const double* re,
                                      const double* im, orz_element** out);
ORZ_API orz_status orz_element_from_json(const char* text, orz_element** out);
ORZ_API orz_status orz_element_to_json(const orz_element* x, char** out);
ORZ_API void orz_element_free(orz_element* x);
ORZ_API orz_status orz_element_total_dimension(const orz_element* x, int* out);
/* Hermitian eigenvalues of all blocks, concatenated; `capacity` must be at
 * least the total dimension. */
ORZ_API orz_status orz_element_eigenvalues(const orz_element* x, double* values,
                                           size_t capacity);
ORZ_API orz_status orz_spectral_truncate(const orz_element* x, double lambda,
                                         orz_element** out);

/* Traces. `weights` may be NULL for the standard trace. */
ORZ_API orz_status orz_trace_create(const orz_element* shape_of, const double* weights,
                                    size_t count, orz_trace** out);
ORZ_API orz_status orz_trace_from_json(const char* text, const orz_element* shape_of,
                                       orz_trace** out);
ORZ_API void orz_trace_free(orz_trace* tau);
ORZ_API orz_status orz_trace_eval(const orz_trace* tau, const orz_element* x, double* re,
                                  double* im);

/* Weights phi = tau(h .) with interpolation parameter alpha. */
ORZ_API orz_status orz_weight_create(const orz_element* h, double alpha, orz_weight** out);
/* When has_alpha is nonzero, `alpha` replaces the record's value. */
ORZ_API orz_status orz_weight_from_json(const char* text, int has_alpha, double alpha,
                                        orz_weight** out);
ORZ_API void orz_weight_free(orz_weight* w);

/* Modulars and norms */
ORZ_API orz_status orz_modular(const orz_nfunction* phi, const orz_trace* tau,
                               const orz_element* x, double* out, int* overflow);
ORZ_API orz_status orz_luxemburg_norm(const orz_nfunction* phi, const orz_trace* tau,
                                      const orz_element* x, double* out);
ORZ_API orz_status orz_amemiya_norm(const orz_nfunction* phi, const orz_trace* tau,
                                    const orz_element* x, double* out);
ORZ_API orz_status orz_lp_norm(const orz_trace* tau, const orz_element* x, double p,
                               double* out);

/* Weighted spaces */
ORZ_API orz_status orz_u_map(const orz_nfunction* phi, const orz_weight* w,
                             const orz_element* x, orz_element** out);
ORZ_API orz_status orz_u_inverse(const orz_nfunction* phi, const orz_weight* w,
                                 const orz_element* y, orz_element** out);
ORZ_API orz_status orz_weighted_modular(const orz_nfunction* phi, const orz_weight* w,
                                        const orz_trace* tau, const orz_element* x,
                                        double* out);
ORZ_API orz_status orz_weighted_norm(const orz_nfunction* phi, const orz_weight* w,
                                     const orz_trace* tau, const orz_element* x, double* out);
ORZ_API orz_status orz_lemma1_gap(const orz_nfunction* phi, const orz_weight* w,
                                  const orz_trace* tau, const orz_element* x, double lambda,
                                  double* out);
ORZ_API orz_status orz_trunov_lp_norm(const orz_trace* tau, const orz_element* h,
                                      const orz_element* x, double p, double alpha,
                                      double* out);

/* Duality. The diagonal solver applies to one-dimensional blocks only;
 * orz_dual_norm picks it when it applies and the ascent search otherwise. */
ORZ_API orz_status orz_pairing(const orz_trace* tau, const orz_element* x, const orz_element* y,
                               double* re, double* im);
ORZ_API orz_status orz_dual_norm(const orz_nfunction* phi, const orz_trace* tau,
                                 const orz_element* y, double* lower, double* upper);
ORZ_API orz_status orz_bidual_norm_diag(const orz_nfunction* phi, const orz_trace* tau,
                                        const orz_element* x, double* out);

/* Counterexample scalars for log-power(beta) with indices 2..n. */
ORZ_API orz_status orz_counterexample_modulars(double beta, int n, double* mu_nu,
                                               double* mu_mu);

/* Reports: one JSON record per line. */
ORZ_API orz_status orz_report_norm(const orz_nfunction* phi, const orz_trace* tau,
                                   const orz_element* x, const orz_weight* w, double lp,
                                   char** out);
ORZ_API orz_status orz_report_conjugate(const orz_nfunction* phi, double t_lo, double t_hi,
                                        int points, char** out);
ORZ_API orz_status orz_report_dual(const orz_nfunction* phi, const orz_trace* tau,
                                   const orz_element* y, char** out);
/* *passed is set to 1 when |weighted - luxemburg(U x)| <= tol * weighted. */
ORZ_API orz_status orz_report_isometry(const orz_nfunction* phi, const orz_trace* tau,
                                       const orz_weight* w, const orz_element* x, double tol,
                                       char** out, int* passed);
ORZ_API orz_status orz_report_counterexample(double beta, int n_max, char** out);

/* Comma-separated suite names in `only` (NULL or "" for all); count <= 0
 * keeps each suite's default. Emits one record per suite in name order and
 * a final summary record. *all_passed is 1 iff every suite passed. */
ORZ_API orz_status orz_proptest_run(uint64_t seed, int count, double tol_scale,
                                    const char* only, int parallel, char** out,
                                    int* all_passed);
/* Newline-separated "name<TAB>default count<TAB>description" lines. */
ORZ_API orz_status orz_proptest_list(char** out);

#ifdef __cplusplus
}
#endif

#endif /* ORLICZ_ORLICZ_H */
