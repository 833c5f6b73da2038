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

#include <limits>
#include <queue>
#include <vector>

#include "dnnmis/reduce.hpp"

namespace dnnmis {
namespace {

constexpr Vertex kFree = std::numeric_limits<Vertex>::max();

// Hopcroft–Karp on the bipartite double cover: left copy u_L is adjacent to
// right copy v_R for every v ∈ N(u).
class DoubleCoverMatching {
 public:
  explicit DoubleCoverMatching(const Graph& g)
      : g_(g), match_left_(g.n(), kFree), match_right_(g.n(), kFree), dist_(g.n()) {
    while (bfs()) {
      for (Vertex u = 0; u < g_.n(); ++u) {
        if (match_left_[u] == kFree) augment(u);
      }
    }
  }

  /// König: Z = vertices reachable from free left vertices by alternating
  /// paths. Cover = (L \ Z) ∪ (R ∩ Z).
  void reachable(std::vector<bool>& left_z, std::vector<bool>& right_z) const {
    const std::size_t n = g_.n();
    left_z.assign(n, false);
    right_z.assign(n, false);
    std::queue<Vertex> q;
    for (Vertex u = 0; u < n; ++u) {
      if (match_left_[u] == kFree) {
        left_z[u] = true;
        q.push(u);
      }
    }
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : g_.neighbors(u)) {
        if (right_z[v] || match_left_[u] == v) continue;
        right_z[v] = true;
        const Vertex back = match_right_[v];
        if (back != kFree && !left_z[back]) {
          left_z[back] = true;
          q.push(back);
        }
      }
    }
  }

 private:
  bool bfs() {
    std::queue<Vertex> q;
    bool found = false;
    for (Vertex u = 0; u < g_.n(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kFree;
      }
    }
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : g_.neighbors(u)) {
        const Vertex back = match_right_[v];
        if (back == kFree) {
          found = true;
        } else if (dist_[back] == kFree) {
          dist_[back] = dist_[u] + 1;
          q.push(back);
        }
      }
    }
    return found;
  }

  // Iterative DFS along the BFS layering.
  bool augment(Vertex root) {
    struct Frame {
      Vertex u;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<Vertex> via;  // right vertex used to descend from each frame
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto nb = g_.neighbors(top.u);
      if (top.next == nb.size()) {
        dist_[top.u] = kFree;
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const Vertex v = nb[top.next++];
      const Vertex back = match_right_[v];
      if (back == kFree) {
        via.push_back(v);
        for (std::size_t i = 0; i < stack.size(); ++i) {
          match_left_[stack[i].u] = via[i];
          match_right_[via[i]] = stack[i].u;
        }
        return true;
      }
      if (dist_[back] == dist_[top.u] + 1) {
        via.push_back(v);
        stack.push_back({back, 0});
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> match_left_;
  std::vector<Vertex> match_right_;
  std::vector<Vertex> dist_;
};

}  // namespace

std::vector<double> lp_half_integral(const Graph& g) {
  DoubleCoverMatching matching(g);
  std::vector<bool> left_z;
  std::vector<bool> right_z;
  matching.reachable(left_z, right_z);
  std::vector<double> x(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const int hits = (left_z[v] ? 0 : 1) + (right_z[v] ? 1 : 0);
    x[v] = 1.0 - 0.5 * hits;
  }
  return x;
}

LpReduction lp_reduce(const Graph& g) {
  const auto x = lp_half_integral(g);
  std::vector<bool> ones(g.n());
  for (Vertex v = 0; v < g.n(); ++v) ones[v] = x[v] == 1.0;
  LpReduction r;
  r.ones = VertexSet::from_mask(ones);
  r.removed = closed_neighborhood(g, r.ones);
  r.residual = induced(g, r.removed.complement());
  return r;
}

}  // namespace dnnmis
