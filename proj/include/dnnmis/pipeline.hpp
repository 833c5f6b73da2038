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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dnnmis/graph.hpp"
#include "dnnmis/report.hpp"
#include "dnnmis/search.hpp"
#include "dnnmis/train.hpp"

namespace dnnmis {

struct SolveConfig {
  TrainConfig train;
  ImproveConfig improve;
  std::uint64_t seed = 0;
  /// Louvain resolution; chosen from the density when empty.
  std::optional<double> resolution;
  /// Below this density the LP reduction runs and the sparse resolution is used.
  double density_threshold = 0.05;
  double sparse_resolution = 1.3;
  double dense_resolution = 0.8;

  bool use_lp = true;
  bool use_communities = true;
  bool use_two_improvement = true;
  bool use_improve = true;
  /// Independent seeded runs of the MIS pipeline; the largest result wins
  /// (ties: lowest restart index).
  std::size_t restarts = 8;
  /// Threads for restarts (when there are several) or per-community solves.
  std::size_t workers = 1;
  std::string input_name;
};

/// Full solve. mc runs on the complement, mvc returns V minus the MIS. The
/// result is re-verified; a failed check throws VerificationError.
SolveReport solve(ProblemKind kind, const Graph& g, const SolveConfig& cfg);

/// Size-preserving view of the MIS pipeline used by solve; exposed for tests.
struct MisRun {
  VertexSet solution;
  std::vector<PhaseRecord> phases;
  Provenance provenance;
  std::string variant;
  double resolution = 0.0;
};
MisRun solve_mis(const Graph& g, const SolveConfig& cfg);

/// G[largest component] with labels carried over (index labels when g has none).
Graph largest_component_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Benchmarks

struct BenchInstance {
  std::string name;
  /// Graph for a given seed.
  std::function<Graph(std::uint64_t)> make;
};

/// The synthetic families: ER, SBM (5 blocks, q = 0.05), BA (m = ⌊0.45n⌋),
/// HK (m = ⌊0.3n⌋, triangle probability 0.5).
std::vector<BenchInstance> synthetic_suite();

struct Dataset {
  std::string name;
  std::string file;
  std::string url;
};

std::vector<Dataset> dataset_suite(const std::string& suite);

/// Loads a dataset from data_dir. Throws MalformedInput with download
/// instructions when the file is absent.
Graph load_dataset(const Dataset& d, const std::string& data_dir);

struct BenchRow {
  std::string suite;
  std::string instance;
  std::string graph;  // "generated", "raw" or "lcc"
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t size = 0;
  bool valid = false;
  double seconds = 0.0;
};

struct BenchOptions {
  std::string suite = "synthetic";
  std::size_t seeds = 2;
  std::string data_dir = "data";
  /// Restrict to instance names (empty: all).
  std::vector<std::string> only;
};

std::vector<BenchRow> bench(const BenchOptions& opts, const SolveConfig& base);

/// Per-seed rows followed by one "mean" row per (instance, graph).
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace dnnmis
