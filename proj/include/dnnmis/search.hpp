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

#include <optional>
#include <vector>

#include "dnnmis/graph.hpp"
#include "dnnmis/rng.hpp"
#include "dnnmis/train.hpp"

namespace dnnmis {

struct ImproveConfig {
  std::size_t lambda0 = 5;
  std::size_t increase_step = 1;
  /// Stop once G[V \ N[U]] has fewer vertices than this.
  std::size_t min_residual = 20;
  std::size_t max_rounds = 50;
  std::optional<double> time_limit_seconds;

  void validate() const;
};

struct ImproveResult {
  VertexSet best;
  /// |best| after each round; nondecreasing.
  std::vector<std::size_t> best_trace;
  std::size_t rounds = 0;
};

/// (1,2)-swap local search: while some solution vertex x has two
/// non-adjacent neighbors whose only solution neighbor is x, replace x by
/// them and re-maximalize. Input must be a maximal independent set.
VertexSet two_improvement(const Graph& g, const VertexSet& s);

/// Annealed re-solve loop: keep the λ lowest-degree solution vertices U,
/// re-solve G[V \ N[U]] with fresh noise, keep the best, grow λ.
ImproveResult improve(const Graph& g, const VertexSet& s, const ImproveConfig& cfg,
                      const TrainConfig& train_cfg, Rng& rng);

}  // namespace dnnmis
