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


#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "dnnmis/error.hpp"
#include "dnnmis/oracle.hpp"
#include "dnnmis/reduce.hpp"
#include "support.hpp"

using namespace dnnmis;
using namespace dnnmis::testing;

namespace {

// Best objective of the MIS LP over x ∈ {0, 1/2, 1}^n, by enumeration.
double brute_force_half_lp(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<int> x(n, 0);  // twice the LP value
  int best = 0;
  for (;;) {
    bool feasible = true;
    for (const Edge& e : g.edges()) feasible = feasible && x[e.u] + x[e.v] <= 2;
    if (feasible) best = std::max(best, std::accumulate(x.begin(), x.end(), 0));
    std::size_t i = 0;
    while (i < n && x[i] == 2) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return best / 2.0;
}

Partition from_labels(std::size_t n, const std::vector<int>& label, double resolution) {
  Partition p;
  p.resolution = resolution;
  const int k = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Vertex>> groups(k);
  for (Vertex v = 0; v < n; ++v) groups[label[v]].push_back(v);
  for (auto& grp : groups) p.communities.emplace_back(n, grp);
  return p;
}

// Resolution-scaled modularity from the pairwise definition.
double reference_modularity(const Graph& g, const std::vector<int>& label, double resolution) {
  const double m = static_cast<double>(g.m());
  double q = 0.0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (label[u] != label[v]) continue;
      const double a = g.has_edge(u, v) ? 1.0 : 0.0;
      q += a - resolution * static_cast<double>(g.degree(u) * g.degree(v)) / (2.0 * m);
    }
  }
  return q / (2.0 * m);
}

// Calls fn on every set partition of {0..n-1} as a restricted growth string.
template <class Fn>
void for_each_partition(std::size_t n, Fn&& fn) {
  std::vector<int> a(n, 0);
  std::vector<int> top(n, 0);
  for (;;) {
    fn(a);
    std::size_t i = n;
    while (i > 1 && a[i - 1] == top[i - 1] + 1) --i;
    if (i <= 1) return;
    ++a[i - 1];
    for (std::size_t j = i; j < n; ++j) {
      a[j] = 0;
      top[j] = std::max(top[j - 1], a[j - 1]);
    }
  }
}

}  // namespace

TEST_CASE("lp reduction on named graphs") {
  const LpReduction s = lp_reduce(star(3));
  CHECK(s.ones == VertexSet(4, {1, 2, 3}));
  CHECK(s.residual.graph().n() == 0);

  const LpReduction c = lp_reduce(cycle(5));
  CHECK(c.ones.empty());
  CHECK(c.residual.graph().n() == 5);
  for (double x : lp_half_integral(cycle(5))) CHECK(x == 0.5);

  const LpReduction null = lp_reduce(Graph::from_edges(4, {}));
  CHECK(null.ones == VertexSet::all(4));
  CHECK(null.residual.graph().n() == 0);
}

TEST_CASE("half-integral lp is feasible and optimal") {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_er(rng, 1, 8, {0.1, 0.2, 0.4, 0.6});
    const auto x = lp_half_integral(g);
    for (double v : x) CHECK((v == 0.0 || v == 0.5 || v == 1.0));
    for (const Edge& e : g.edges()) CHECK(x[e.u] + x[e.v] <= 1.0);
    CHECK(std::accumulate(x.begin(), x.end(), 0.0) == brute_force_half_lp(g));
  }
}

TEST_CASE("lp reduction is sound") {
  Rng rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_er(rng, 1, 16, {0.05, 0.1, 0.2, 0.3});
    const LpReduction r = lp_reduce(g);
    CHECK(is_independent(g, r.ones));
    CHECK(r.removed == closed_neighborhood(g, r.ones));
    for (Vertex v : r.residual.to_parent()) {
      for (Vertex w : g.neighbors(v)) CHECK_FALSE(r.ones.contains(w));
    }
    CHECK(r.ones.size() + brute_force_mis(r.residual.graph()) == brute_force_mis(g));
  }
}

TEST_CASE("modularity matches the pairwise definition") {
  Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_er(rng, 2, 10, {0.2, 0.4, 0.6});
    if (g.m() == 0) continue;
    std::vector<int> label(g.n());
    const int k = 1 + static_cast<int>(rng.below(g.n()));
    for (int& l : label) l = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    // Relabel densely so no community is empty.
    std::vector<int> remap(k, -1);
    int next = 0;
    for (int& l : label) {
      if (remap[l] < 0) remap[l] = next++;
      l = remap[l];
    }
    for (double res : {0.8, 1.0, 1.3}) {
      CHECK(modularity(g, from_labels(g.n(), label, res)) ==
            doctest::Approx(reference_modularity(g, label, res)));
    }
  }
}

TEST_CASE("louvain on named graphs") {
  Rng rng(1);
  const Graph bridge = bridged_triangles();
  const Partition p = louvain(bridge, 1.0, rng);
  REQUIRE(p.communities.size() == 2);
  CHECK(p.communities[0] == VertexSet(6, {0, 1, 2}));
  CHECK(p.communities[1] == VertexSet(6, {3, 4, 5}));

  // The split found is the best of all 203 partitions.
  double best = -1.0;
  std::vector<int> arg;
  for_each_partition(6, [&](const std::vector<int>& label) {
    const double q = reference_modularity(bridge, label, 1.0);
    if (q > best + 1e-12) {
      best = q;
      arg = label;
    }
  });
  CHECK(arg == std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(modularity(bridge, p) == doctest::Approx(best));

  const Partition null = louvain(Graph::from_edges(4, {}), 1.0, rng);
  CHECK(null.communities.size() == 4);

  const Partition k6 = louvain(complete(6), 1.0, rng);
  CHECK(k6.communities.size() == 1);
  for_each_partition(6, [&](const std::vector<int>& label) {
    CHECK(reference_modularity(complete(6), label, 1.0) <=
          reference_modularity(complete(6), std::vector<int>(6, 0), 1.0) + 1e-12);
  });

  CHECK_THROWS_AS(louvain(bridge, 0.0, rng), ContractError);
}

TEST_CASE("louvain partitions cover the graph and levels improve") {
  Rng rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_er(rng, 5, 80, {0.05, 0.1, 0.3});
    for (double res : {0.8, 1.3}) {
      std::vector<double> levels;
      const Partition p = louvain(g, res, rng, &levels);
      std::vector<int> seen(g.n(), 0);
      std::size_t total = 0;
      Vertex last_min = 0;
      for (std::size_t c = 0; c < p.communities.size(); ++c) {
        const VertexSet& s = p.communities[c];
        CHECK_FALSE(s.empty());
        if (c > 0) CHECK(*s.begin() > last_min);
        last_min = *s.begin();
        total += s.size();
        for (Vertex v : s) ++seen[v];
      }
      CHECK(total == g.n());
      for (int x : seen) CHECK(x == 1);
      for (std::size_t i = 1; i < levels.size(); ++i) CHECK(levels[i] > levels[i - 1]);
      if (!levels.empty() && g.m() > 0) CHECK(levels.back() == doctest::Approx(modularity(g, p)));
    }
    Rng a(trial);
    Rng b(trial);
    CHECK(louvain(g, 1.0, a).communities == louvain(g, 1.0, b).communities);
  }
}

TEST_CASE("inter-cluster and forbidden edges") {
  const Graph bridge = bridged_triangles();
  Partition two = from_labels(6, {0, 0, 0, 1, 1, 1}, 1.0);
  CHECK(inter_cluster_edges(bridge, two) == std::vector<Edge>{{2, 3}});
  CHECK(inter_cluster_edges(bridge, from_labels(6, {0, 0, 0, 0, 0, 0}, 1.0)).empty());
  CHECK(inter_cluster_edges(bridge, from_labels(6, {0, 1, 2, 3, 4, 5}, 1.0)) == bridge.edges());

  const std::vector<VertexSet> clash{VertexSet(6, {2}), VertexSet(6, {3})};
  CHECK(forbidden_edges(bridge, two, clash) == std::vector<Edge>{{2, 3}});
  const std::vector<VertexSet> apart{VertexSet(6, {0}), VertexSet(6, {4})};
  CHECK(forbidden_edges(bridge, two, apart).empty());
  CHECK(is_independent(bridge, apart[0].united(apart[1])));
}

TEST_CASE("forbidden-edge repair") {
  // Path 0-1-2-3 split as {0,1},{2,3} with solutions {1},{2}.
  const Graph p4 = path(4);
  const Partition halves = from_labels(4, {0, 0, 1, 1}, 1.0);
  const std::vector<VertexSet> sols{VertexSet(4, {1}), VertexSet(4, {2})};
  const auto f = forbidden_edges(p4, halves, sols);
  CHECK(f == std::vector<Edge>{{1, 2}});
  RepairStats stats;
  CHECK(repair_forbidden(p4, VertexSet(4, {1, 2}), f, &stats) == VertexSet(4, {0, 2}));
  CHECK(stats.swaps == 1);
  CHECK(stats.removals == 0);

  CHECK(repair_forbidden(sample5(), VertexSet(5, {2, 3}), {}) == VertexSet(5, {2, 3}));

  const Graph edge = Graph::from_edges(2, {{0, 1}});
  const VertexSet fixed = repair_forbidden(edge, VertexSet::all(2), {{0, 1}}, &stats);
  CHECK(fixed.size() == 1);
  CHECK(stats.removals == 1);
}

TEST_CASE("repair output is independent and loses at most one vertex per pair") {
  Rng rng(61);
  const TrainConfig cfg;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_er(rng, 6, 40, {0.05, 0.1, 0.2});
    const Partition p = louvain(g, 1.0, rng);
    std::vector<VertexSet> sols;
    for (const auto& c : p.communities) {
      const Subgraph sub = induced(g, c);
      sols.push_back(sub.lift(solve_mis_dnn(sub.graph(), cfg, rng), g.n()));
    }
    VertexSet b(g.n());
    for (const auto& s : sols) b = b.united(s);
    const auto f = forbidden_edges(g, p, sols);
    const VertexSet r = repair_forbidden(g, b, f);
    CHECK(is_independent(g, r));
    CHECK(r.size() + f.size() >= b.size());
  }
}

TEST_CASE("completion to a maximal set") {
  const TrainConfig cfg;
  Rng rng(3);
  CHECK(complete_to_maximal(sample5(), VertexSet(5, {2, 3, 4}), cfg, rng) == VertexSet(5, {2, 3, 4}));
  CHECK(complete_to_maximal(sample5(), VertexSet(5), cfg, rng).size() == 3);
  const VertexSet p4 = complete_to_maximal(path(4), VertexSet(4, {0}), cfg, rng);
  CHECK(p4.size() == 2);
  CHECK(p4.contains(0));
  CHECK(is_maximal_independent(path(4), p4));
}
