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

#include "dnnmis/report.hpp"

#include "dnnmis/error.hpp"

namespace dnnmis {

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::mis:
      return "mis";
    case ProblemKind::mc:
      return "mc";
    case ProblemKind::mvc:
      return "mvc";
  }
  return "mis";
}

ProblemKind parse_problem(const std::string& text) {
  if (text == "mis") return ProblemKind::mis;
  if (text == "mc") return ProblemKind::mc;
  if (text == "mvc") return ProblemKind::mvc;
  throw MalformedInput("unknown problem '" + text + "' (expected mis, mc or mvc)");
}

Verdict verify_solution(ProblemKind kind, const Graph& g, const VertexSet& s) {
  if (s.host_n() != g.n()) return {};
  switch (kind) {
    case ProblemKind::mis:
      return {is_independent(g, s), is_maximal_independent(g, s)};
    case ProblemKind::mvc: {
      const VertexSet rest = s.complement();
      return {is_vertex_cover(g, s), is_maximal_independent(g, rest)};
    }
    case ProblemKind::mc: {
      if (!is_clique(g, s)) return {false, false};
      const auto in = s.mask();
      for (Vertex v = 0; v < g.n(); ++v) {
        if (in[v]) continue;
        std::size_t hits = 0;
        for (Vertex w : g.neighbors(v)) hits += in[w] ? 1 : 0;
        if (hits == s.size()) return {true, false};
      }
      return {true, true};
    }
  }
  return {};
}

}  // namespace dnnmis
