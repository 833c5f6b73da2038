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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dnnmis {

using Vertex = std::uint32_t;

/// Undirected edge, stored with u < v once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Default vertex cap for materializing a complement graph.
inline constexpr std::size_t kDefaultComplementCap = 5000;

/// A set of vertices of some host graph, kept sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t host_n) : host_n_(host_n) {}
  VertexSet(std::size_t host_n, std::vector<Vertex> members);
  VertexSet(std::size_t host_n, std::initializer_list<Vertex> members)
      : VertexSet(host_n, std::vector<Vertex>(members)) {}

  /// Builds the set {v : mask[v]}.
  static VertexSet from_mask(const std::vector<bool>& mask);
  static VertexSet all(std::size_t host_n);

  std::size_t host_n() const { return host_n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::vector<bool> mask() const;
  /// V \ this.
  VertexSet complement() const;
  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t host_n_ = 0;
  std::vector<Vertex> members_;
};

class Subgraph;

/// Immutable simple undirected graph in CSR form with sorted neighbor lists.
class Graph {
 public:
  Graph() = default;

  /// Drops self-loops and duplicate pairs. Throws MalformedInput when an
  /// endpoint is >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const { return targets_.size() / 2; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const { return max_degree_; }
  bool has_edge(Vertex u, Vertex v) const;
  double density() const;

  /// Every edge once, with u < v, in ascending order.
  std::vector<Edge> edges() const;

  /// Original identifier of v; the decimal index when no labels were given.
  std::string label(Vertex v) const;
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
  std::size_t max_degree_ = 0;
};

/// An induced subgraph together with its map back to the parent's indices.
class Subgraph {
 public:
  Subgraph() = default;
  Subgraph(Graph graph, std::vector<Vertex> to_parent)
      : graph_(std::move(graph)), to_parent_(std::move(to_parent)) {}

  const Graph& graph() const { return graph_; }
  std::span<const Vertex> to_parent() const { return to_parent_; }
  Vertex parent_of(Vertex local) const { return to_parent_[local]; }

  /// Maps a set over the subgraph into a set over the parent graph.
  VertexSet lift(const VertexSet& local, std::size_t parent_n) const;

 private:
  Graph graph_;
  std::vector<Vertex> to_parent_;
};

/// Complement graph. Throws CapacityError when g.n() exceeds cap.
Graph complement(const Graph& g, std::size_t cap = kDefaultComplementCap);

/// G[U] with labels carried over.
Subgraph induced(const Graph& g, const VertexSet& u);

/// G[V \ (S ∪ N(S))].
Subgraph remove_closed_neighborhood(const Graph& g, const VertexSet& s);

/// S ∪ N(S).
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// Vertices of the largest connected component (ties: the one holding the
/// smallest vertex index).
VertexSet largest_component(const Graph& g);

}  // namespace dnnmis
