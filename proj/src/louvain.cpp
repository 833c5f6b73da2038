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
#include <vector>

#include "dnnmis/error.hpp"
#include "dnnmis/reduce.hpp"

namespace dnnmis {
namespace {

// Gains below this are treated as ties and never trigger a move.
constexpr double kMinGain = 1e-12;

// Weighted graph of one Louvain level. loops[i] is the weight of i's self-loop
// (edges collapsed inside the super-node), counted once.
struct Level {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<double> weights;
  std::vector<double> loops;

  std::size_t size() const { return loops.size(); }
  double strength(std::uint32_t i) const {
    double k = 2.0 * loops[i];
    for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) k += weights[e];
    return k;
  }
};

Level from_graph(const Graph& g) {
  Level l;
  l.offsets.assign(g.n() + 1, 0);
  for (Vertex v = 0; v < g.n(); ++v) l.offsets[v + 1] = l.offsets[v] + g.degree(v);
  l.targets.reserve(2 * g.m());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex w : g.neighbors(v)) l.targets.push_back(w);
  }
  l.weights.assign(l.targets.size(), 1.0);
  l.loops.assign(g.n(), 0.0);
  return l;
}

// Phase 1: local moves until no vertex has a positive gain. Returns true when
// at least one vertex changed community.
bool local_moves(const Level& l, double resolution, double two_m, Rng& rng,
                 std::vector<std::uint32_t>& comm) {
  const std::size_t n = l.size();
  std::vector<double> strength(n);
  std::vector<double> tot(n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) {
    strength[i] = l.strength(i);
    comm[i] = i;
    tot[i] = strength[i];
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  rng.shuffle(std::span<std::uint32_t>(order));

  std::vector<double> link(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool any_move = false;
  for (;;) {
    std::size_t moves = 0;
    for (std::uint32_t i : order) {
      const std::uint32_t old_c = comm[i];
      touched.clear();
      for (std::size_t e = l.offsets[i]; e < l.offsets[i + 1]; ++e) {
        const std::uint32_t c = comm[l.targets[e]];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += l.weights[e];
      }
      tot[old_c] -= strength[i];
      const double scale = resolution * strength[i] / two_m;
      std::uint32_t best_c = old_c;
      double best_gain = link[old_c] - scale * tot[old_c];
      for (std::uint32_t c : touched) {
        const double gain = link[c] - scale * tot[c];
        if (gain > best_gain + kMinGain) {
          best_gain = gain;
          best_c = c;
        }
      }
      tot[best_c] += strength[i];
      comm[i] = best_c;
      for (std::uint32_t c : touched) link[c] = 0.0;
      if (best_c != old_c) ++moves;
    }
    if (moves == 0) break;
    any_move = true;
  }
  return any_move;
}

// Phase 2: collapse communities into super-nodes. comm is renumbered densely
// in place; returns the aggregated level.
Level aggregate(const Level& l, std::vector<std::uint32_t>& comm) {
  const std::size_t n = l.size();
  std::vector<std::uint32_t> dense(n, ~std::uint32_t{0});
  std::uint32_t k = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (dense[comm[i]] == ~std::uint32_t{0}) dense[comm[i]] = k++;
  }
  for (auto& c : comm) c = dense[c];

  std::vector<std::vector<std::uint32_t>> members(k);
  for (std::uint32_t i = 0; i < n; ++i) members[comm[i]].push_back(i);

  Level out;
  out.loops.assign(k, 0.0);
  out.offsets.assign(k + 1, 0);
  std::vector<double> link(k, 0.0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t c = 0; c < k; ++c) {
    touched.clear();
    for (std::uint32_t i : members[c]) {
      out.loops[c] += l.loops[i];
      for (std::size_t e = l.offsets[i]; e < l.offsets[i + 1]; ++e) {
        const std::uint32_t d = comm[l.targets[e]];
        if (d == c) {
          // Each internal edge is seen from both ends.
          out.loops[c] += 0.5 * l.weights[e];
          continue;
        }
        if (link[d] == 0.0) touched.push_back(d);
        link[d] += l.weights[e];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t d : touched) {
      out.targets.push_back(d);
      out.weights.push_back(link[d]);
      link[d] = 0.0;
    }
    out.offsets[c + 1] = out.targets.size();
  }
  return out;
}

// Communities ordered by their smallest member.
Partition from_assignment(const std::vector<std::uint32_t>& assignment, double resolution) {
  const std::size_t n = assignment.size();
  std::vector<std::vector<Vertex>> groups;
  std::vector<std::uint32_t> slot(n, ~std::uint32_t{0});
  for (Vertex v = 0; v < n; ++v) {
    auto& s = slot[assignment[v]];
    if (s == ~std::uint32_t{0}) {
      s = static_cast<std::uint32_t>(groups.size());
      groups.emplace_back();
    }
    groups[s].push_back(v);
  }
  Partition p;
  p.resolution = resolution;
  p.communities.reserve(groups.size());
  for (auto& grp : groups) p.communities.emplace_back(n, std::move(grp));
  return p;
}

}  // namespace

std::vector<std::uint32_t> Partition::membership() const {
  std::size_t n = 0;
  for (const auto& c : communities) n = std::max(n, c.host_n());
  std::vector<std::uint32_t> out(n, 0);
  for (std::uint32_t i = 0; i < communities.size(); ++i) {
    for (Vertex v : communities[i]) out[v] = i;
  }
  return out;
}

double modularity(const Graph& g, const Partition& p) {
  if (g.m() == 0) return 0.0;
  const auto member = p.membership();
  const double m = static_cast<double>(g.m());
  std::vector<double> internal(p.communities.size(), 0.0);
  std::vector<double> degree(p.communities.size(), 0.0);
  for (Vertex v = 0; v < g.n(); ++v) {
    degree[member[v]] += static_cast<double>(g.degree(v));
    for (Vertex w : g.neighbors(v)) {
      if (v < w && member[v] == member[w]) internal[member[v]] += 1.0;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    const double share = degree[c] / (2.0 * m);
    q += internal[c] / m - p.resolution * share * share;
  }
  return q;
}

Partition louvain(const Graph& g, double resolution, Rng& rng,
                  std::vector<double>* level_modularity) {
  if (!(resolution > 0.0)) throw ContractError("Louvain resolution must be positive");
  const std::size_t n = g.n();
  std::vector<std::uint32_t> assignment(n);
  std::iota(assignment.begin(), assignment.end(), std::uint32_t{0});
  if (level_modularity != nullptr) {
    level_modularity->assign(1, modularity(g, from_assignment(assignment, resolution)));
  }

  if (g.m() > 0) {
    const double two_m = 2.0 * static_cast<double>(g.m());
    Level level = from_graph(g);
    std::vector<std::uint32_t> comm(level.size());
    while (local_moves(level, resolution, two_m, rng, comm)) {
      Level next = aggregate(level, comm);
      for (auto& a : assignment) a = comm[a];
      level = std::move(next);
      comm.assign(level.size(), 0);
      if (level_modularity != nullptr) {
        level_modularity->push_back(modularity(g, from_assignment(assignment, resolution)));
      }
    }
  }
  return from_assignment(assignment, resolution);
}

}  // namespace dnnmis
