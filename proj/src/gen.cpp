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

#include "dnnmis/gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dnnmis/error.hpp"
#include "dnnmis/rng.hpp"

namespace dnnmis {
namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError(std::string(what) + " must lie in [0,1]");
}

void check_attach(std::size_t n, std::size_t m_attach) {
  if (m_attach < 1 || m_attach >= n) throw ContractError("need 1 <= m_attach < n");
}

// m distinct entries drawn uniformly from pool (with its multiplicities).
std::vector<Vertex> distinct_sample(const std::vector<Vertex>& pool, std::size_t m, Rng& rng) {
  std::set<Vertex> picked;
  while (picked.size() < m) picked.insert(pool[rng.below(pool.size())]);
  std::vector<Vertex> out(picked.begin(), picked.end());
  // Random order so the set's sorting does not bias which target comes first.
  rng.shuffle(std::span<Vertex>(out));
  return out;
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p, "edge probability");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
  check_attach(n, m_attach);
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> repeated;
  std::vector<Vertex> targets(m_attach);
  std::iota(targets.begin(), targets.end(), Vertex{0});
  for (auto source = static_cast<Vertex>(m_attach); source < n; ++source) {
    for (Vertex t : targets) {
      edges.push_back({t, source});
      repeated.push_back(t);
    }
    repeated.insert(repeated.end(), m_attach, source);
    targets = distinct_sample(repeated, m_attach, rng);
  }
  return Graph::from_edges(n, edges);
}

Graph holme_kim(std::size_t n, std::size_t m_attach, double p_triangle, std::uint64_t seed) {
  check_attach(n, m_attach);
  check_probability(p_triangle, "triangle probability");
  Rng rng(seed);
  std::vector<std::set<Vertex>> adj(n);
  std::vector<Vertex> repeated(m_attach);
  std::iota(repeated.begin(), repeated.end(), Vertex{0});
  auto link = [&](Vertex a, Vertex b) {
    adj[a].insert(b);
    adj[b].insert(a);
    repeated.push_back(b);
  };
  for (auto source = static_cast<Vertex>(m_attach); source < n; ++source) {
    std::vector<Vertex> pool = distinct_sample(repeated, m_attach, rng);
    Vertex target = pool.back();
    pool.pop_back();
    link(source, target);
    std::size_t count = 1;
    while (count < m_attach) {
      if (rng.bernoulli(p_triangle)) {
        std::vector<Vertex> around;
        for (Vertex w : adj[target]) {
          if (w != source && adj[source].count(w) == 0) around.push_back(w);
        }
        if (!around.empty()) {
          link(source, around[rng.below(around.size())]);
          ++count;
          continue;
        }
      }
      // Pool entries can already be neighbors through a triangle step.
      while (!pool.empty() && adj[source].count(pool.back()) != 0) pool.pop_back();
      if (pool.empty()) {
        // Fewer than m_attach neighbors exist, so a preferential redraw
        // outside N(source) always terminates.
        do {
          target = repeated[rng.below(repeated.size())];
        } while (adj[source].count(target) != 0);
      } else {
        target = pool.back();
        pool.pop_back();
      }
      link(source, target);
      ++count;
    }
    repeated.insert(repeated.end(), count, source);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph sbm(const std::vector<std::size_t>& block_sizes, double p_intra, double q_inter,
          std::uint64_t seed) {
  check_probability(p_intra, "intra-block probability");
  check_probability(q_inter, "inter-block probability");
  std::vector<std::uint32_t> block;
  for (std::uint32_t b = 0; b < block_sizes.size(); ++b) block.insert(block.end(), block_sizes[b], b);
  const std::size_t n = block.size();
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(block[u] == block[v] ? p_intra : q_inter)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace dnnmis
