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

#include "dnnmis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "dnnmis/error.hpp"

namespace dnnmis {
namespace {

using Mask = std::uint32_t;

struct Search {
  std::vector<Mask> adj;
  Mask best = 0;
  int best_size = 0;
  std::uint64_t nodes = 0;

  void run(Mask alive, Mask taken, int taken_size) {
    ++nodes;
    // Isolated vertices are always taken.
    for (Mask rest = alive; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((adj[v] & alive) == 0) {
        alive &= ~(Mask{1} << v);
        taken |= Mask{1} << v;
        ++taken_size;
      }
    }
    if (taken_size + std::popcount(alive) <= best_size) return;
    if (alive == 0) {
      best = taken;
      best_size = taken_size;
      return;
    }
    int pivot = -1;
    int pivot_deg = -1;
    for (Mask rest = alive; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj[v] & alive);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    const Mask bit = Mask{1} << pivot;
    run(alive & ~bit & ~adj[pivot], taken | bit, taken_size + 1);
    run(alive & ~bit, taken, taken_size);
  }
};

}  // namespace

OracleResult exact_mis(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kOracleMisCap) {
    throw CapacityError("exact MIS oracle supports at most " + std::to_string(kOracleMisCap) +
                        " vertices, got " + std::to_string(n));
  }
  Search s;
  s.adj.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) s.adj[v] |= Mask{1} << w;
  }
  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  s.run(all, 0, 0);

  std::vector<Vertex> members;
  for (Mask rest = s.best; rest != 0; rest &= rest - 1) {
    members.push_back(static_cast<Vertex>(std::countr_zero(rest)));
  }
  return {static_cast<std::size_t>(s.best_size), VertexSet(n, std::move(members)), s.nodes};
}

double exact_min_objective(const Graph& g, Variant variant) {
  const std::size_t n = g.n();
  if (n > kOracleObjectiveCap) {
    throw CapacityError("objective enumeration supports at most " +
                        std::to_string(kOracleObjectiveCap) + " vertices, got " +
                        std::to_string(n));
  }
  const auto obj = DnnObjective::build(g, variant);
  ThetaVector theta(n, 0.0);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t v = 0; v < n; ++v) theta[v] = static_cast<double>((bits >> v) & 1U);
    best = std::min(best, obj.evaluate(theta));
  }
  return best;
}

}  // namespace dnnmis
