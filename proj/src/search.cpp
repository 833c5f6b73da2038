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

#include "dnnmis/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

#include "dnnmis/error.hpp"

namespace dnnmis {

void ImproveConfig::validate() const {
  if (lambda0 < 1) throw ContractError("lambda0 must be at least 1");
  if (time_limit_seconds && !(*time_limit_seconds >= 0.0)) {
    throw ContractError("time limit must be nonnegative");
  }
}

namespace {

class TwoImprover {
 public:
  TwoImprover(const Graph& g, const VertexSet& s)
      : g_(g), in_(s.mask()), tight_(g.n(), 0), queued_(g.n(), false), mark_(g.n(), 0) {
    for (Vertex v : s) {
      for (Vertex w : g_.neighbors(v)) ++tight_[w];
    }
    for (Vertex v : s) push(v);
  }

  VertexSet run() {
    while (!queue_.empty()) {
      const Vertex x = queue_.front();
      queue_.pop_front();
      queued_[x] = false;
      if (in_[x]) try_swap(x);
    }
    return VertexSet::from_mask(in_);
  }

 private:
  void push(Vertex v) {
    if (!queued_[v]) {
      queued_[v] = true;
      queue_.push_back(v);
    }
  }

  void insert(Vertex v) {
    in_[v] = true;
    push(v);
    for (Vertex w : g_.neighbors(v)) ++tight_[w];
  }

  void remove(Vertex v) {
    in_[v] = false;
    for (Vertex w : g_.neighbors(v)) --tight_[w];
  }

  // The unique solution neighbor of a 1-tight vertex.
  Vertex owner_of(Vertex w) const {
    for (Vertex y : g_.neighbors(w)) {
      if (in_[y]) return y;
    }
    return w;
  }

  void try_swap(Vertex x) {
    candidates_.clear();
    for (Vertex w : g_.neighbors(x)) {
      if (!in_[w] && tight_[w] == 1) candidates_.push_back(w);
    }
    if (candidates_.size() < 2) return;

    ++stamp_;
    for (Vertex w : candidates_) mark_[w] = stamp_;
    Vertex first = x;
    Vertex second = x;
    for (Vertex a : candidates_) {
      std::size_t adjacent = 0;
      for (Vertex y : g_.neighbors(a)) adjacent += mark_[y] == stamp_;
      if (adjacent + 1 == candidates_.size()) continue;
      // Some candidate is not adjacent to a; find the first one.
      ++stamp_;
      for (Vertex y : g_.neighbors(a)) mark_[y] = stamp_;
      for (Vertex b : candidates_) {
        if (b != a && mark_[b] != stamp_) {
          first = a;
          second = b;
          break;
        }
      }
      break;
    }
    if (first == x) return;

    remove(x);
    insert(first);
    insert(second);
    for (Vertex w : g_.neighbors(x)) {
      if (!in_[w] && tight_[w] == 0) insert(w);
    }
    // Re-check every solution vertex that gained a 1-tight neighbor.
    for (Vertex v : {x, first, second}) {
      for (Vertex w : g_.neighbors(v)) {
        if (!in_[w] && tight_[w] == 1) push(owner_of(w));
      }
    }
  }

  const Graph& g_;
  std::vector<bool> in_;
  std::vector<std::size_t> tight_;
  std::vector<bool> queued_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  std::deque<Vertex> queue_;
  std::vector<Vertex> candidates_;
};

}  // namespace

VertexSet two_improvement(const Graph& g, const VertexSet& s) { return TwoImprover(g, s).run(); }

ImproveResult improve(const Graph& g, const VertexSet& s, const ImproveConfig& cfg,
                      const TrainConfig& train_cfg, Rng& rng) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  ImproveResult result;
  result.best = s;
  std::size_t lambda = cfg.lambda0;

  for (std::size_t round = 0; round < cfg.max_rounds; ++round) {
    if (cfg.time_limit_seconds) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
      if (spent.count() >= *cfg.time_limit_seconds) break;
    }
    // The λ lowest-degree members of the incumbent, ties by index.
    std::vector<Vertex> order(result.best.begin(), result.best.end());
    const std::size_t keep = std::min(lambda, order.size());
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    order.resize(keep);
    const VertexSet fixed(g.n(), std::move(order));

    const Subgraph residual = remove_closed_neighborhood(g, fixed);
    if (residual.graph().n() < cfg.min_residual) break;

    Rng round_rng = rng.fork(round);
    const VertexSet fresh = solve_mis_dnn(residual.graph(), train_cfg, round_rng);
    VertexSet candidate = fixed.united(residual.lift(fresh, g.n()));
    if (candidate.size() > result.best.size()) result.best = std::move(candidate);

    ++result.rounds;
    result.best_trace.push_back(result.best.size());
    lambda += cfg.increase_step;
  }
  return result;
}

}  // namespace dnnmis
