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

#include "dnnmis/graph.hpp"

#include <algorithm>
#include <numeric>

#include "dnnmis/error.hpp"

namespace dnnmis {

VertexSet::VertexSet(std::size_t host_n, std::vector<Vertex> members)
    : host_n_(host_n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= host_n_) {
    throw ContractError("vertex " + std::to_string(members_.back()) +
                        " outside host graph of " + std::to_string(host_n_) + " vertices");
  }
}

VertexSet VertexSet::from_mask(const std::vector<bool>& mask) {
  VertexSet s(mask.size());
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
  }
  return s;
}

VertexSet VertexSet::all(std::size_t host_n) {
  VertexSet s(host_n);
  s.members_.resize(host_n);
  std::iota(s.members_.begin(), s.members_.end(), Vertex{0});
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::mask() const {
  std::vector<bool> out(host_n_, false);
  for (Vertex v : members_) out[v] = true;
  return out;
}

VertexSet VertexSet::complement() const {
  auto in = mask();
  in.flip();
  return from_mask(in);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  if (other.host_n_ != host_n_) throw ContractError("union of sets over different graphs");
  VertexSet out(host_n_);
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  if (other.host_n_ != host_n_) throw ContractError("difference of sets over different graphs");
  VertexSet out(host_n_);
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw ContractError("label table size does not match vertex count");
  }
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw MalformedInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") references a vertex >= n=" + std::to_string(n));
    }
    if (e.u == e.v) continue;
    norm.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : norm) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(2 * norm.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // With edges sorted, the first pass writes each vertex's smaller neighbors
  // in ascending order and the second its larger ones, so lists come out sorted.
  for (const Edge& e : norm) g.targets_[fill[e.v]++] = e.u;
  for (const Edge& e : norm) g.targets_[fill[e.u]++] = e.v;
  for (std::size_t v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1] - g.offsets_[v]);
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::density() const {
  const double nn = static_cast<double>(n());
  if (nn < 2) return 0.0;
  return 2.0 * static_cast<double>(m()) / (nn * (nn - 1.0));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

VertexSet Subgraph::lift(const VertexSet& local, std::size_t parent_n) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent_[v]);
  return VertexSet(parent_n, std::move(out));
}

Graph complement(const Graph& g, std::size_t cap) {
  const std::size_t n = g.n();
  if (n > cap) {
    throw CapacityError("complement of a " + std::to_string(n) +
                        "-vertex graph exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2 - g.m());
  std::vector<bool> adj(n, false);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) adj[w] = true;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adj[v]) edges.push_back({u, v});
    }
    for (Vertex w : g.neighbors(u)) adj[w] = false;
  }
  return Graph::from_edges(n, edges, g.labels());
}

Subgraph induced(const Graph& g, const VertexSet& u) {
  const std::size_t n = g.n();
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(n, kAbsent);
  std::vector<Vertex> to_parent(u.begin(), u.end());
  for (std::size_t i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(to_parent[i])) {
      if (local[w] != kAbsent && local[w] > i) edges.push_back({static_cast<Vertex>(i), local[w]});
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(to_parent.size());
    for (Vertex p : to_parent) labels.push_back(g.labels()[p]);
  }
  return {Graph::from_edges(to_parent.size(), edges, std::move(labels)), std::move(to_parent)};
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<bool> hit(g.n(), false);
  for (Vertex v : s) {
    hit[v] = true;
    for (Vertex w : g.neighbors(v)) hit[w] = true;
  }
  return VertexSet::from_mask(hit);
}

Subgraph remove_closed_neighborhood(const Graph& g, const VertexSet& s) {
  return induced(g, closed_neighborhood(g, s).complement());
}

bool is_independent(const Graph& g, const VertexSet& s) {
  const auto in = s.mask();
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) return false;
    }
  }
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  return closed_neighborhood(g, s).size() == g.n();
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.has_edge(members[i], members[j])) return false;
    }
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  const auto in = s.mask();
  for (Vertex u = 0; u < g.n(); ++u) {
    if (in[u]) continue;
    for (Vertex w : g.neighbors(u)) {
      if (!in[w]) return false;
    }
  }
  return true;
}

VertexSet largest_component(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> comp(n, ~std::uint32_t{0});
  std::vector<std::size_t> sizes;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] != ~std::uint32_t{0}) continue;
    const auto id = static_cast<std::uint32_t>(sizes.size());
    sizes.push_back(0);
    comp[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == ~std::uint32_t{0}) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  if (sizes.empty()) return VertexSet(n);
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<bool> mask(n, false);
  for (std::size_t v = 0; v < n; ++v) mask[v] = comp[v] == best;
  return VertexSet::from_mask(mask);
}

}  // namespace dnnmis
