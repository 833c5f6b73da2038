/* Copyright 2026 The dnnmis Authors
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

/* C interface to the dnnmis solver. All handles are opaque; every fallible
 * call returns a dnnmis_status and leaves a message for dnnmis_last_error(). */

#ifndef DNNMIS_DNNMIS_H_
#define DNNMIS_DNNMIS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DNNMIS_API __declspec(dllexport)
#else
#define DNNMIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum dnnmis_status {
  DNNMIS_OK = 0,
  DNNMIS_INVALID_INPUT = 1,
  DNNMIS_CAPACITY = 2,
  DNNMIS_VERIFICATION = 3,
  DNNMIS_INTERNAL = 4
} dnnmis_status;

typedef enum dnnmis_format { DNNMIS_EDGELIST = 0, DNNMIS_DIMACS = 1 } dnnmis_format;

typedef enum dnnmis_problem { DNNMIS_MIS = 0, DNNMIS_MC = 1, DNNMIS_MVC = 2 } dnnmis_problem;

typedef enum dnnmis_model {
  DNNMIS_ER = 0,
  DNNMIS_BA = 1,
  DNNMIS_HK = 2,
  DNNMIS_SBM = 3
} dnnmis_model;

typedef struct dnnmis_graph dnnmis_graph;
typedef struct dnnmis_report dnnmis_report;

/* Message of the last failed call on this thread ("" if none). */
DNNMIS_API const char* dnnmis_last_error(void);

/* ---- graphs ---------------------------------------------------------- */

/* lcc != 0 keeps only the largest connected component. */
DNNMIS_API dnnmis_status dnnmis_graph_load(const char* path, dnnmis_format format, int lcc,
                                           dnnmis_graph** out);
DNNMIS_API dnnmis_status dnnmis_graph_parse(const char* text, size_t length, dnnmis_format format,
                                            dnnmis_graph** out);
/* edges holds 2*m vertex ids in [0, n). */
DNNMIS_API dnnmis_status dnnmis_graph_from_edges(size_t n, const uint32_t* edges, size_t m,
                                                 dnnmis_graph** out);
DNNMIS_API size_t dnnmis_graph_n(const dnnmis_graph* g);
DNNMIS_API size_t dnnmis_graph_m(const dnnmis_graph* g);
DNNMIS_API dnnmis_status dnnmis_graph_write(const dnnmis_graph* g, const char* path,
                                            dnnmis_format format);
DNNMIS_API void dnnmis_graph_free(dnnmis_graph* g);

typedef struct dnnmis_gen_params {
  dnnmis_model model;
  size_t n;
  double p;         /* ER edge probability; SBM intra-block probability */
  size_t m_attach;  /* BA/HK */
  double p_triangle;
  size_t blocks;    /* SBM: n split into equal consecutive blocks */
  double q;         /* SBM inter-block probability */
  uint64_t seed;
} dnnmis_gen_params;

DNNMIS_API void dnnmis_gen_params_init(dnnmis_gen_params* params);
DNNMIS_API dnnmis_status dnnmis_generate(const dnnmis_gen_params* params, dnnmis_graph** out);

/* Exact MIS size by branch and bound; n up to 26. witness may be NULL,
 * otherwise it receives up to n vertex ids. */
DNNMIS_API dnnmis_status dnnmis_oracle_mis(const dnnmis_graph* g, size_t* size, uint32_t* witness);

/* ---- solving --------------------------------------------------------- */

typedef struct dnnmis_solve_options {
  dnnmis_problem problem;
  double alpha;
  double learning_rate;
  uint64_t seed;
  double resolution; /* <= 0: chosen from the density */
  int use_lp;
  int use_communities;
  int use_two_improvement;
  int use_improve;
  size_t lambda0;
  double time_limit_seconds; /* <= 0: none */
  size_t restarts; /* seeded runs, best kept; 0 acts as 1 */
  size_t workers;
  const char* input_name; /* echoed in the report; may be NULL */
} dnnmis_solve_options;

DNNMIS_API void dnnmis_solve_options_init(dnnmis_solve_options* opts);
DNNMIS_API dnnmis_status dnnmis_solve(const dnnmis_graph* g, const dnnmis_solve_options* opts,
                                      dnnmis_report** out);

/* Report JSON; the pointer lives as long as the report. */
DNNMIS_API const char* dnnmis_report_json(const dnnmis_report* r);
DNNMIS_API size_t dnnmis_report_size(const dnnmis_report* r);
DNNMIS_API int dnnmis_report_valid(const dnnmis_report* r);
/* Copies min(capacity, size) vertex ids; returns the full size. */
DNNMIS_API size_t dnnmis_report_solution(const dnnmis_report* r, uint32_t* out, size_t capacity);
DNNMIS_API void dnnmis_report_free(dnnmis_report* r);

/* ---- benchmarks ------------------------------------------------------ */

/* suite: "synthetic", "snap" or "citation". Writes CSV to csv_path. */
DNNMIS_API dnnmis_status dnnmis_bench(const char* suite, size_t seeds, const char* data_dir,
                                      const dnnmis_solve_options* base, const char* csv_path);

#ifdef __cplusplus
}
#endif

#endif /* DNNMIS_DNNMIS_H_ */
