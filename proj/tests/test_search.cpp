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


#include "doctest.h"
#include "dnnmis/error.hpp"
#include "dnnmis/oracle.hpp"
#include "dnnmis/search.hpp"
#include "support.hpp"

using namespace dnnmis;
using namespace dnnmis::testing;

namespace {

// Arbitrary-order greedy maximal set, often far from optimal.
VertexSet greedy_by_index(const Graph& g) {
  std::vector<bool> blocked(g.n(), false);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (blocked[v]) continue;
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  return VertexSet(g.n(), out);
}

// Star K1,k on 0..k plus `loose` isolated vertices after it.
Graph star_with_isolated(std::size_t k, std::size_t loose) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= k; ++v) e.push_back({0, v});
  return Graph::from_edges(k + 1 + loose, e);
}

}  // namespace

TEST_CASE("two-improvement swaps") {
  CHECK(two_improvement(star(3), VertexSet(4, {0})) == VertexSet(4, {1, 2, 3}));
  CHECK(two_improvement(cycle(4), VertexSet(4, {0, 2})) == VertexSet(4, {0, 2}));
  CHECK(two_improvement(sample5(), VertexSet(5, {2, 3, 4})) == VertexSet(5, {2, 3, 4}));
  // Every member of {1,3} on P5 has only one free 1-tight neighbor: a local optimum.
  CHECK(two_improvement(path(5), VertexSet(5, {1, 3})) == VertexSet(5, {1, 3}));
}

TEST_CASE("two-improvement is monotone and keeps maximality") {
  Rng rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_er(rng, 1, 20, {0.1, 0.2, 0.3, 0.5});
    const VertexSet s = greedy_by_index(g);
    const VertexSet t = two_improvement(g, s);
    CHECK(t.size() >= s.size());
    CHECK(is_maximal_independent(g, t));
    CHECK(t.size() <= exact_mis(g).size);
    CHECK(two_improvement(g, t) == t);
  }
}

TEST_CASE("improve keeps an optimal incumbent") {
  ImproveConfig cfg;
  cfg.min_residual = 0;
  Rng rng(1);
  const ImproveResult r = improve(sample5(), VertexSet(5, {2, 3, 4}), cfg, TrainConfig{}, rng);
  CHECK(r.best == VertexSet(5, {2, 3, 4}));
  for (std::size_t x : r.best_trace) CHECK(x == 3);
}

TEST_CASE("improve re-solves around the kept low-degree members") {
  // The five isolated vertices have the lowest degree and are kept; the star
  // is re-solved from scratch.
  const Graph g = star_with_isolated(25, 5);
  const VertexSet poor(g.n(), {0, 26, 27, 28, 29, 30});
  Rng rng(2);
  const ImproveResult r = improve(g, poor, ImproveConfig{}, TrainConfig{}, rng);
  CHECK(r.best.size() == 30);
  CHECK(is_maximal_independent(g, r.best));
  REQUIRE_FALSE(r.best_trace.empty());
  CHECK(r.best_trace.front() == 30);
}

TEST_CASE("improve stops below the residual floor") {
  Rng rng(3);
  const ImproveResult r = improve(path(5), VertexSet(5, {1, 3}), ImproveConfig{}, TrainConfig{}, rng);
  CHECK(r.rounds == 0);
  CHECK(r.best == VertexSet(5, {1, 3}));
}

TEST_CASE("improve honours round and time limits") {
  const Graph g = erdos_renyi(120, 0.05, 4);
  ImproveConfig cfg;
  cfg.max_rounds = 3;
  Rng rng(4);
  CHECK(improve(g, greedy_by_index(g), cfg, TrainConfig{}, rng).rounds <= 3);
  cfg.max_rounds = 1000;
  cfg.time_limit_seconds = 0.0;
  CHECK(improve(g, greedy_by_index(g), cfg, TrainConfig{}, rng).rounds == 0);
  cfg.lambda0 = 0;
  CHECK_THROWS_AS(cfg.validate(), ContractError);
}

TEST_CASE("improve trace is monotone and reproducible") {
  Rng rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_er(rng, 30, 80, {0.05, 0.1, 0.2});
    const VertexSet s = greedy_by_index(g);
    const std::uint64_t seed = rng.next();
    Rng a(seed);
    Rng b(seed);
    const ImproveResult ra = improve(g, s, ImproveConfig{}, TrainConfig{}, a);
    const ImproveResult rb = improve(g, s, ImproveConfig{}, TrainConfig{}, b);
    CHECK(ra.best == rb.best);
    CHECK(ra.best_trace == rb.best_trace);
    CHECK(ra.best.size() >= s.size());
    CHECK(is_maximal_independent(g, ra.best));
    for (std::size_t i = 1; i < ra.best_trace.size(); ++i) CHECK(ra.best_trace[i] >= ra.best_trace[i - 1]);
    CHECK(ra.best_trace.size() == ra.rounds);
  }
}
