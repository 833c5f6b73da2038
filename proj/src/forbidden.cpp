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

#include <set>
#include <vector>

#include "dnnmis/error.hpp"
#include "dnnmis/reduce.hpp"

namespace dnnmis {

std::vector<Edge> inter_cluster_edges(const Graph& g, const Partition& p) {
  const auto member = p.membership();
  if (member.size() != g.n()) throw ContractError("partition does not cover the graph");
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (member[e.u] != member[e.v]) out.push_back(e);
  }
  return out;
}

std::vector<Edge> forbidden_edges(const Graph& g, const Partition& p,
                                  const std::vector<VertexSet>& solutions) {
  std::vector<bool> selected(g.n(), false);
  for (const auto& s : solutions) {
    for (Vertex v : s) selected[v] = true;
  }
  std::vector<Edge> out;
  for (const Edge& e : inter_cluster_edges(g, p)) {
    if (selected[e.u] && selected[e.v]) out.push_back(e);
  }
  return out;
}

VertexSet repair_forbidden(const Graph& g, const VertexSet& b, const std::vector<Edge>& forbidden,
                           RepairStats* stats) {
  const std::size_t n = g.n();
  auto in = b.mask();
  std::set<Edge> pending;
  std::vector<std::size_t> occurrences(n, 0);
  for (Edge e : forbidden) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (pending.insert(e).second) {
      ++occurrences[e.u];
      ++occurrences[e.v];
    }
  }
  // tight[w] = |I ∩ N(w)|
  std::vector<std::size_t> tight(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) continue;
    for (Vertex w : g.neighbors(v)) ++tight[w];
  }

  auto drop = [&](Vertex q) {
    in[q] = false;
    for (Vertex w : g.neighbors(q)) {
      --tight[w];
      if (!in[w]) continue;
      const Edge e = q < w ? Edge{q, w} : Edge{w, q};
      if (pending.erase(e) != 0) {
        --occurrences[e.u];
        --occurrences[e.v];
      }
    }
  };
  RepairStats local;

  while (!pending.empty()) {
    const Edge pair = *pending.begin();
    bool replaced = false;
    for (Vertex q : {pair.u, pair.v}) {
      for (Vertex w : g.neighbors(q)) {
        // q is an I-neighbor of w, so tight[w] == 1 means q is the only one.
        if (in[w] || tight[w] != 1) continue;
        drop(q);
        in[w] = true;
        for (Vertex x : g.neighbors(w)) ++tight[x];
        replaced = true;
        break;
      }
      if (replaced) break;
    }
    if (replaced) {
      ++local.swaps;
      continue;
    }
    Vertex victim = pair.v;
    if (occurrences[pair.u] != occurrences[pair.v]) {
      victim = occurrences[pair.u] > occurrences[pair.v] ? pair.u : pair.v;
    } else if (g.degree(pair.u) != g.degree(pair.v)) {
      victim = g.degree(pair.u) > g.degree(pair.v) ? pair.u : pair.v;
    }
    drop(victim);
    ++local.removals;
  }
  if (stats != nullptr) *stats = local;
  return VertexSet::from_mask(in);
}

VertexSet complete_to_maximal(const Graph& g, const VertexSet& s, const TrainConfig& cfg,
                              Rng& rng) {
  const Subgraph residual = remove_closed_neighborhood(g, s);
  if (residual.graph().n() == 0) return s;
  const VertexSet extra = solve_mis_dnn(residual.graph(), cfg, rng);
  return s.united(residual.lift(extra, g.n()));
}

}  // namespace dnnmis
