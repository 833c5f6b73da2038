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
#include <string>
#include <vector>

#include "dnnmis/graph.hpp"

namespace dnnmis {

enum class ProblemKind { mis, mc, mvc };

std::string to_string(ProblemKind kind);
/// Throws MalformedInput for anything but "mis", "mc", "mvc".
ProblemKind parse_problem(const std::string& text);

struct PhaseRecord {
  std::string name;
  std::size_t size_after = 0;
  double seconds = 0.0;

  friend bool operator==(const PhaseRecord&, const PhaseRecord&) = default;
};

struct SolverEcho {
  std::string variant;
  double alpha = 0.0;
  double lr = 0.0;
  std::uint64_t seed = 0;
  double resolution = 0.0;
  std::size_t lambda0 = 0;

  friend bool operator==(const SolverEcho&, const SolverEcho&) = default;
};

/// Bookkeeping of what each phase did to the MIS instance.
struct Provenance {
  double density = 0.0;
  bool lp_applied = false;
  std::size_t lp_ones = 0;
  std::size_t lp_removed = 0;
  std::size_t residual_n = 0;
  std::vector<std::size_t> community_sizes;
  std::size_t inter_cluster_edges = 0;
  std::size_t forbidden_edges = 0;
  std::size_t repair_swaps = 0;
  std::size_t repair_removals = 0;
  std::size_t improve_rounds = 0;
  std::vector<std::size_t> improve_trace;
  std::size_t restarts = 1;
  std::size_t best_restart = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SolveReport {
  std::string problem;
  std::string input;
  std::size_t n = 0;
  std::size_t m = 0;
  SolverEcho solver;
  std::vector<PhaseRecord> phases;
  /// Labels of the chosen vertices of the input graph.
  std::vector<std::string> solution;
  /// Same solution as vertex indices of the input graph.
  VertexSet solution_set;
  std::size_t size = 0;
  bool valid = false;
  bool maximal = false;
  double wall_seconds = 0.0;
  Provenance provenance;
};

struct Verdict {
  bool valid = false;
  /// mis: maximal independent; mc: maximal clique; mvc: minimal cover.
  bool maximal = false;
};

/// Independent re-check of a solution against the input graph.
Verdict verify_solution(ProblemKind kind, const Graph& g, const VertexSet& s);

}  // namespace dnnmis
