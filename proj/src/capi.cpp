// Copyright 2026 The dnnmis Authors
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

#include "dnnmis/dnnmis.h"

#include <algorithm>
#include <fstream>
#include <string>

#include "dnnmis/error.hpp"
#include "dnnmis/gen.hpp"
#include "dnnmis/io.hpp"
#include "dnnmis/oracle.hpp"
#include "dnnmis/pipeline.hpp"

struct dnnmis_graph {
  dnnmis::Graph graph;
};

struct dnnmis_report {
  dnnmis::SolveReport report;
  std::string json;
};

namespace {

thread_local std::string last_error;

dnnmis_status fail(dnnmis_status code, const char* what) {
  last_error = what;
  return code;
}

// Maps library exceptions onto status codes.
template <class Fn>
dnnmis_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return DNNMIS_OK;
  } catch (const dnnmis::MalformedInput& e) {
    return fail(DNNMIS_INVALID_INPUT, e.what());
  } catch (const dnnmis::ContractError& e) {
    return fail(DNNMIS_INVALID_INPUT, e.what());
  } catch (const dnnmis::CapacityError& e) {
    return fail(DNNMIS_CAPACITY, e.what());
  } catch (const dnnmis::VerificationError& e) {
    return fail(DNNMIS_VERIFICATION, e.what());
  } catch (const std::exception& e) {
    return fail(DNNMIS_INTERNAL, e.what());
  } catch (...) {
    return fail(DNNMIS_INTERNAL, "unknown error");
  }
}

dnnmis::GraphFormat to_format(dnnmis_format f) {
  switch (f) {
    case DNNMIS_EDGELIST:
      return dnnmis::GraphFormat::edgelist;
    case DNNMIS_DIMACS:
      return dnnmis::GraphFormat::dimacs;
  }
  throw dnnmis::MalformedInput("unknown graph format");
}

dnnmis::ProblemKind to_problem(dnnmis_problem p) {
  switch (p) {
    case DNNMIS_MIS:
      return dnnmis::ProblemKind::mis;
    case DNNMIS_MC:
      return dnnmis::ProblemKind::mc;
    case DNNMIS_MVC:
      return dnnmis::ProblemKind::mvc;
  }
  throw dnnmis::MalformedInput("unknown problem kind");
}

dnnmis::SolveConfig to_config(const dnnmis_solve_options& o) {
  dnnmis::SolveConfig cfg;
  cfg.train.alpha = o.alpha;
  cfg.train.learning_rate = o.learning_rate;
  cfg.seed = o.seed;
  if (o.resolution > 0.0) cfg.resolution = o.resolution;
  cfg.use_lp = o.use_lp != 0;
  cfg.use_communities = o.use_communities != 0;
  cfg.use_two_improvement = o.use_two_improvement != 0;
  cfg.use_improve = o.use_improve != 0;
  cfg.improve.lambda0 = o.lambda0;
  if (o.time_limit_seconds > 0.0) cfg.improve.time_limit_seconds = o.time_limit_seconds;
  cfg.restarts = o.restarts;
  cfg.workers = o.workers;
  if (o.input_name != nullptr) cfg.input_name = o.input_name;
  return cfg;
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw dnnmis::ContractError(std::string(what) + " is NULL");
}

}  // namespace

extern "C" {

const char* dnnmis_last_error(void) { return last_error.c_str(); }

dnnmis_status dnnmis_graph_load(const char* path, dnnmis_format format, int lcc,
                                dnnmis_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    dnnmis::Graph g = dnnmis::read_graph_file(path, to_format(format));
    if (lcc != 0) g = dnnmis::largest_component_graph(g);
    *out = new dnnmis_graph{std::move(g)};
  });
}

dnnmis_status dnnmis_graph_parse(const char* text, size_t length, dnnmis_format format,
                                 dnnmis_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const std::string_view view(text, length);
    dnnmis::Graph g = to_format(format) == dnnmis::GraphFormat::dimacs
                          ? dnnmis::parse_dimacs(view)
                          : dnnmis::parse_edge_list(view);
    *out = new dnnmis_graph{std::move(g)};
  });
}

dnnmis_status dnnmis_graph_from_edges(size_t n, const uint32_t* edges, size_t m,
                                      dnnmis_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (m > 0) require(edges, "edges");
    std::vector<dnnmis::Edge> list(m);
    for (size_t i = 0; i < m; ++i) list[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = new dnnmis_graph{dnnmis::Graph::from_edges(n, list)};
  });
}

size_t dnnmis_graph_n(const dnnmis_graph* g) { return g == nullptr ? 0 : g->graph.n(); }
size_t dnnmis_graph_m(const dnnmis_graph* g) { return g == nullptr ? 0 : g->graph.m(); }

dnnmis_status dnnmis_graph_write(const dnnmis_graph* g, const char* path, dnnmis_format format) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    dnnmis::write_graph_file(g->graph, path, to_format(format));
  });
}

void dnnmis_graph_free(dnnmis_graph* g) { delete g; }

void dnnmis_gen_params_init(dnnmis_gen_params* params) {
  if (params == nullptr) return;
  *params = {};
  params->model = DNNMIS_ER;
  params->n = 100;
  params->p = 0.1;
  params->m_attach = 1;
  params->p_triangle = 0.5;
  params->blocks = 5;
  params->q = 0.05;
}

dnnmis_status dnnmis_generate(const dnnmis_gen_params* params, dnnmis_graph** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    const auto& p = *params;
    dnnmis::Graph g;
    switch (p.model) {
      case DNNMIS_ER:
        g = dnnmis::erdos_renyi(p.n, p.p, p.seed);
        break;
      case DNNMIS_BA:
        g = dnnmis::barabasi_albert(p.n, p.m_attach, p.seed);
        break;
      case DNNMIS_HK:
        g = dnnmis::holme_kim(p.n, p.m_attach, p.p_triangle, p.seed);
        break;
      case DNNMIS_SBM: {
        if (p.blocks == 0 || p.n % p.blocks != 0) {
          throw dnnmis::ContractError("sbm needs n divisible by the block count");
        }
        g = dnnmis::sbm(std::vector<std::size_t>(p.blocks, p.n / p.blocks), p.p, p.q, p.seed);
        break;
      }
      default:
        throw dnnmis::MalformedInput("unknown generator model");
    }
    *out = new dnnmis_graph{std::move(g)};
  });
}

dnnmis_status dnnmis_oracle_mis(const dnnmis_graph* g, size_t* size, uint32_t* witness) {
  return guarded([&] {
    require(g, "graph");
    require(size, "size");
    const dnnmis::OracleResult r = dnnmis::exact_mis(g->graph);
    *size = r.size;
    if (witness != nullptr) std::copy(r.witness.begin(), r.witness.end(), witness);
  });
}

void dnnmis_solve_options_init(dnnmis_solve_options* opts) {
  if (opts == nullptr) return;
  const dnnmis::SolveConfig d;
  *opts = {};
  opts->problem = DNNMIS_MIS;
  opts->alpha = d.train.alpha;
  opts->learning_rate = d.train.learning_rate;
  opts->seed = d.seed;
  opts->resolution = 0.0;
  opts->use_lp = d.use_lp;
  opts->use_communities = d.use_communities;
  opts->use_two_improvement = d.use_two_improvement;
  opts->use_improve = d.use_improve;
  opts->lambda0 = d.improve.lambda0;
  opts->time_limit_seconds = 0.0;
  opts->restarts = d.restarts;
  opts->workers = d.workers;
  opts->input_name = nullptr;
}

dnnmis_status dnnmis_solve(const dnnmis_graph* g, const dnnmis_solve_options* opts,
                           dnnmis_report** out) {
  return guarded([&] {
    require(g, "graph");
    require(opts, "options");
    require(out, "out");
    auto* r = new dnnmis_report;
    try {
      r->report = dnnmis::solve(to_problem(opts->problem), g->graph, to_config(*opts));
      r->json = dnnmis::write_report(r->report, &g->graph);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

const char* dnnmis_report_json(const dnnmis_report* r) { return r == nullptr ? "" : r->json.c_str(); }
size_t dnnmis_report_size(const dnnmis_report* r) { return r == nullptr ? 0 : r->report.size; }
int dnnmis_report_valid(const dnnmis_report* r) {
  return r != nullptr && r->report.valid && r->report.maximal;
}

size_t dnnmis_report_solution(const dnnmis_report* r, uint32_t* out, size_t capacity) {
  if (r == nullptr) return 0;
  const auto members = r->report.solution_set.members();
  if (out != nullptr) std::copy_n(members.begin(), std::min(capacity, members.size()), out);
  return members.size();
}

void dnnmis_report_free(dnnmis_report* r) { delete r; }

dnnmis_status dnnmis_bench(const char* suite, size_t seeds, const char* data_dir,
                           const dnnmis_solve_options* base, const char* csv_path) {
  return guarded([&] {
    require(suite, "suite");
    require(csv_path, "csv_path");
    dnnmis::BenchOptions bo;
    bo.suite = suite;
    bo.seeds = seeds;
    if (data_dir != nullptr) bo.data_dir = data_dir;
    dnnmis_solve_options defaults;
    dnnmis_solve_options_init(&defaults);
    const auto rows = dnnmis::bench(bo, to_config(base != nullptr ? *base : defaults));
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw dnnmis::MalformedInput(std::string("cannot write '") + csv_path + "'");
    out << dnnmis::bench_csv(rows);
  });
}

}  // extern "C"
