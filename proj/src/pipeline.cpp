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

#include "dnnmis/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <thread>

#include "dnnmis/error.hpp"
#include "dnnmis/reduce.hpp"
#include "dnnmis/rng.hpp"

namespace dnnmis {
namespace {

using Clock = std::chrono::steady_clock;

// Independent seed streams per phase, so toggling one phase leaves the
// randomness of the others unchanged.
enum Stream : std::uint64_t {
  kLouvain = 1,
  kCommunity = 2,
  kComplete = 3,
  kImprove = 4,
  kRestart = 1000
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class PhaseLog {
 public:
  void record(const std::string& name, std::size_t size_after) {
    const auto now = Clock::now();
    phases_.push_back({name, size_after, std::chrono::duration<double>(now - mark_).count()});
    mark_ = now;
  }
  std::vector<PhaseRecord> take() { return std::move(phases_); }

 private:
  Clock::time_point mark_ = Clock::now();
  std::vector<PhaseRecord> phases_;
};

// Runs body(0..count-1) on up to `workers` threads. Results must go to
// per-index slots; the first failure by index is rethrown.
template <class Body>
void parallel_for(std::size_t count, std::size_t workers, Body&& body) {
  std::vector<std::exception_ptr> failures(count);
  auto run = [&](std::size_t i) {
    try {
      body(i);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };
  workers = std::min(std::max<std::size_t>(workers, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) run(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

// Solves every community on its induced subgraph; results are lifted to g.
std::vector<VertexSet> solve_communities(const Graph& g, const Partition& part,
                                         const SolveConfig& cfg, std::size_t workers) {
  std::vector<VertexSet> out(part.communities.size());
  const std::uint64_t base = derive_seed(cfg.seed, kCommunity);
  parallel_for(out.size(), workers, [&](std::size_t i) {
    const Subgraph sub = induced(g, part.communities[i]);
    Rng rng(derive_seed(base, i));
    out[i] = sub.lift(solve_mis_dnn(sub.graph(), cfg.train, rng), g.n());
  });
  return out;
}

std::string variant_label(const Partition& part, std::size_t cap) {
  bool any_h = false;
  bool any_f = false;
  for (const auto& c : part.communities) (c.size() <= cap ? any_h : any_f) = true;
  if (any_h && any_f) return "h+f";
  return any_f ? "f" : "h";
}

// One seeded pass of the MIS pipeline.
MisRun solve_mis_once(const Graph& g, const SolveConfig& cfg, std::size_t workers) {
  const auto t0 = Clock::now();
  MisRun run;
  PhaseLog log;
  Provenance& pv = run.provenance;
  pv.density = g.density();
  const bool sparse = pv.density < cfg.density_threshold;

  // LP reduction; everything downstream works on the residual.
  VertexSet ones(g.n());
  std::vector<Vertex> identity(g.n());
  std::iota(identity.begin(), identity.end(), Vertex{0});
  Subgraph residual(g, std::move(identity));
  if (cfg.use_lp && sparse) {
    LpReduction lp = lp_reduce(g);
    pv.lp_applied = true;
    pv.lp_ones = lp.ones.size();
    pv.lp_removed = lp.removed.size();
    ones = lp.ones;
    residual = std::move(lp.residual);
    log.record("lp_reduce", ones.size());
  }
  const Graph& h = residual.graph();
  pv.residual_n = h.n();

  run.resolution = cfg.resolution.value_or(sparse ? cfg.sparse_resolution : cfg.dense_resolution);
  Partition part;
  if (cfg.use_communities && h.n() > 0) {
    Rng rng(derive_seed(cfg.seed, kLouvain));
    part = louvain(h, run.resolution, rng);
  } else {
    part.resolution = run.resolution;
    if (h.n() > 0) part.communities.push_back(VertexSet::all(h.n()));
  }
  for (const auto& c : part.communities) pv.community_sizes.push_back(c.size());
  pv.inter_cluster_edges = inter_cluster_edges(h, part).size();
  if (cfg.use_communities) log.record("louvain", ones.size());
  run.variant = variant_label(part, cfg.train.complement_cap);

  const std::vector<VertexSet> solutions = solve_communities(h, part, cfg, workers);
  VertexSet b(h.n());
  for (const auto& s : solutions) b = b.united(s);
  log.record("dnn", ones.size() + b.size());

  const std::vector<Edge> forbidden = forbidden_edges(h, part, solutions);
  pv.forbidden_edges = forbidden.size();
  RepairStats stats;
  VertexSet current = repair_forbidden(h, b, forbidden, &stats);
  pv.repair_swaps = stats.swaps;
  pv.repair_removals = stats.removals;
  log.record("repair", ones.size() + current.size());

  {
    Rng rng(derive_seed(cfg.seed, kComplete));
    current = complete_to_maximal(h, current, cfg.train, rng);
  }
  log.record("complete", ones.size() + current.size());

  if (cfg.use_two_improvement) {
    current = two_improvement(h, current);
    log.record("two_improvement", ones.size() + current.size());
  }

  if (cfg.use_improve) {
    ImproveConfig ic = cfg.improve;
    if (ic.time_limit_seconds) {
      ic.time_limit_seconds = std::max(0.0, *ic.time_limit_seconds - seconds_since(t0));
    }
    Rng rng(derive_seed(cfg.seed, kImprove));
    ImproveResult res = improve(h, current, ic, cfg.train, rng);
    current = std::move(res.best);
    pv.improve_rounds = res.rounds;
    pv.improve_trace = std::move(res.best_trace);
    log.record("improve", ones.size() + current.size());
  }

  run.solution = ones.united(residual.lift(current, g.n()));
  log.record("reattach", run.solution.size());
  run.phases = log.take();
  return run;
}

}  // namespace

MisRun solve_mis(const Graph& g, const SolveConfig& cfg) {
  cfg.train.validate();
  cfg.improve.validate();
  const std::size_t restarts = std::max<std::size_t>(cfg.restarts, 1);
  if (restarts == 1) return solve_mis_once(g, cfg, cfg.workers);

  // Restart 0 keeps the caller's seed so restarts=1 and restarts>1 agree on it.
  std::vector<MisRun> runs(restarts);
  parallel_for(restarts, cfg.workers, [&](std::size_t r) {
    SolveConfig local = cfg;
    if (r > 0) local.seed = derive_seed(cfg.seed, kRestart + r);
    runs[r] = solve_mis_once(g, local, 1);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (runs[r].solution.size() > runs[best].solution.size()) best = r;
  }
  MisRun out = std::move(runs[best]);
  out.provenance.restarts = restarts;
  out.provenance.best_restart = best;
  return out;
}

SolveReport solve(ProblemKind kind, const Graph& g, const SolveConfig& cfg) {
  const auto t0 = Clock::now();
  // mc is an MIS of the complement; mis and mvc both start from an MIS of g.
  Graph complemented;
  if (kind == ProblemKind::mc) complemented = complement(g, cfg.train.complement_cap);
  const Graph& work = kind == ProblemKind::mc ? complemented : g;

  MisRun run = solve_mis(work, cfg);
  VertexSet answer = kind == ProblemKind::mvc ? run.solution.complement() : run.solution;

  const Verdict verdict = verify_solution(kind, g, answer);
  if (!verdict.valid || !verdict.maximal) {
    throw VerificationError("solution failed re-verification for " + to_string(kind) +
                            " (valid=" + std::to_string(verdict.valid) +
                            ", maximal=" + std::to_string(verdict.maximal) + ")");
  }
  run.phases.push_back({"verify", answer.size(), 0.0});

  SolveReport r;
  r.problem = to_string(kind);
  r.input = cfg.input_name;
  r.n = g.n();
  r.m = g.m();
  r.solver = {run.variant, cfg.train.alpha,  cfg.train.learning_rate,
              cfg.seed,    run.resolution,   cfg.improve.lambda0};
  r.phases = std::move(run.phases);
  for (Vertex v : answer) r.solution.push_back(g.label(v));
  r.size = answer.size();
  r.solution_set = std::move(answer);
  r.valid = verdict.valid;
  r.maximal = verdict.maximal;
  r.provenance = std::move(run.provenance);
  r.wall_seconds = seconds_since(t0);
  return r;
}

Graph largest_component_graph(const Graph& g) {
  const Subgraph sub = induced(g, largest_component(g));
  if (g.has_labels()) return sub.graph();
  std::vector<std::string> labels;
  for (Vertex p : sub.to_parent()) labels.push_back(g.label(p));
  const std::vector<Edge> edges = sub.graph().edges();
  return Graph::from_edges(sub.graph().n(), edges, std::move(labels));
}

}  // namespace dnnmis
