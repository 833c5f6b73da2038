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

#pragma once

#include <cstdint>
#include <vector>

#include "dnnmis/graph.hpp"
#include "dnnmis/rng.hpp"
#include "dnnmis/train.hpp"

namespace dnnmis {

/// Result of the half-integral LP (Nemhauser–Trotter) reduction.
struct LpReduction {
  /// Vertices at value 1; some maximum independent set contains all of them.
  VertexSet ones;
  /// ones ∪ N(ones).
  VertexSet removed;
  /// G[V \ removed].
  Subgraph residual;
};

/// Solves the MIS LP relaxation through a maximum matching (Hopcroft–Karp)
/// of the bipartite double cover and König's theorem.
LpReduction lp_reduce(const Graph& g);

/// Half-integral LP values x*_v ∈ {0, 1/2, 1} behind lp_reduce.
std::vector<double> lp_half_integral(const Graph& g);

struct Partition {
  /// Disjoint, nonempty, covering V; ordered by smallest member.
  std::vector<VertexSet> communities;
  double resolution = 1.0;

  /// community index of every vertex.
  std::vector<std::uint32_t> membership() const;
};

/// Resolution-scaled modularity Σ_c [L_c/m − γ (D_c / 2m)²]. 0 for edgeless graphs.
double modularity(const Graph& g, const Partition& p);

/// Multi-level Louvain. Phase-1 visit order is shuffled by rng. When given,
/// level_modularity receives the modularity of the singleton start and of the
/// partition after every level.
Partition louvain(const Graph& g, double resolution, Rng& rng,
                  std::vector<double>* level_modularity = nullptr);

/// Edges whose endpoints lie in different communities, ascending.
std::vector<Edge> inter_cluster_edges(const Graph& g, const Partition& p);

/// Inter-cluster edges with both endpoints in the union of per-community
/// solutions (given as sets over g).
std::vector<Edge> forbidden_edges(const Graph& g, const Partition& p,
                                  const std::vector<VertexSet>& solutions);

struct RepairStats {
  std::size_t swaps = 0;
  std::size_t removals = 0;
};

/// Removes every forbidden edge from B by swapping an endpoint for a 1-tight
/// neighbor or, failing that, dropping the endpoint that appears in more
/// remaining forbidden edges (ties: higher degree, then higher index). Pairs
/// are taken in ascending (min, max) order.
VertexSet repair_forbidden(const Graph& g, const VertexSet& b, const std::vector<Edge>& forbidden,
                           RepairStats* stats = nullptr);

/// s ∪ solve_mis_dnn(G[V \ N[s]]).
VertexSet complete_to_maximal(const Graph& g, const VertexSet& s, const TrainConfig& cfg, Rng& rng);

}  // namespace dnnmis
