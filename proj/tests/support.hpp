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


// Fixtures and brute-force oracles shared by the unit tests. Everything here
// is deliberately naive so it can cross-check the optimized code.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dnnmis/dnn.hpp"
#include "dnnmis/gen.hpp"
#include "dnnmis/graph.hpp"
#include "dnnmis/rng.hpp"
#include "json.hpp"

namespace dnnmis::testing {

// Five vertices, edges v1-v2, v1-v3, v2-v4, v2-v5 (0-based below). MIS 3.
inline Graph sample5() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}); }

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph::from_edges(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::from_edges(leaves + 1, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    e.push_back({i, static_cast<Vertex>(i + 5)});
    e.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
  }
  return Graph::from_edges(10, e);
}

// Two triangles {0,1,2} and {3,4,5} joined by the bridge (2,3).
inline Graph bridged_triangles() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

inline VertexSet subset_of(std::size_t n, std::uint64_t bits) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if ((bits >> v) & 1U) members.push_back(v);
  return VertexSet(n, members);
}

// Independence checked straight from the edge list.
inline bool independent_by_edges(const Graph& g, std::uint64_t bits) {
  for (const Edge& e : g.edges())
    if (((bits >> e.u) & 1U) && ((bits >> e.v) & 1U)) return false;
  return true;
}

// Largest independent subset by scanning all 2^n subsets.
inline std::size_t brute_force_mis(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.n()); ++bits) {
    if (independent_by_edges(g, bits)) {
      best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(bits)));
    }
  }
  return best;
}

// Objective evaluated from its definition on the adjacency predicate, without
// the term lists the library builds.
inline double reference_objective(const Graph& g, const ThetaVector& t, Variant variant) {
  auto relu = [](double x) { return x > 0.0 ? x : 0.0; };
  const auto n = static_cast<double>(g.n());
  double value = 0.0;
  for (Vertex v = 0; v < g.n(); ++v) value -= relu(t[v] - 0.5);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const double s = relu(t[u] + t[v] - 1.0);
      if (g.has_edge(u, v)) {
        value += n * s;
      } else if (variant == Variant::h) {
        value -= s;
      }
    }
  }
  return value;
}

// Theta with every coordinate, pair sum and the single-vertex threshold at
// least `gap` away from a ReLU kink.
inline ThetaVector theta_off_kinks(std::size_t n, Rng& rng, double gap = 1e-3) {
  for (;;) {
    ThetaVector t(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) t[i] = rng.uniform();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = std::abs(t[i] - 0.5) >= gap;
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = std::abs(t[i] + t[j] - 1.0) >= gap;
    }
    if (ok) return t;
  }
}

// Central finite difference of fn at t along every coordinate.
inline std::vector<double> central_difference(const std::function<double(const ThetaVector&)>& fn,
                                              const ThetaVector& t, double step = 1e-6) {
  std::vector<double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    ThetaVector hi = t;
    ThetaVector lo = t;
    hi[i] += step;
    lo[i] -= step;
    out[i] = (fn(hi) - fn(lo)) / (2.0 * step);
  }
  return out;
}

inline double relative_error(double analytic, double numeric) {
  return std::abs(analytic - numeric) / std::max({1.0, std::abs(analytic), std::abs(numeric)});
}

// Seeded ER graph with random size in [lo, hi] and p from `ps`.
inline Graph random_er(Rng& rng, std::size_t lo, std::size_t hi, const std::vector<double>& ps) {
  const std::size_t n = lo + rng.below(hi - lo + 1);
  const double p = ps[rng.below(ps.size())];
  return erdos_renyi(n, p, rng.next());
}

// Report JSON with every wall-clock field zeroed, for byte comparisons.
inline std::string without_timing(const std::string& report) {
  auto j = nlohmann::ordered_json::parse(report);
  j["wall_seconds"] = 0.0;
  for (auto& p : j["phases"]) p["seconds"] = 0.0;
  return j.dump(2);
}

}  // namespace dnnmis::testing
