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
#include <optional>
#include <span>
#include <vector>

#include "dnnmis/dnn.hpp"
#include "dnnmis/graph.hpp"
#include "dnnmis/rng.hpp"

namespace dnnmis {

struct TrainConfig {
  double learning_rate = 0.1;
  double alpha = 0.5;
  std::size_t max_iters = 3000;
  std::size_t plateau_patience = 200;
  double plateau_tol = 1e-6;
  /// Upper bound of the uniform init noise s on (0, noise_bound].
  double noise_bound = 0.01;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  /// Graphs above this many vertices are trained on f instead of h.
  std::size_t complement_cap = kDefaultComplementCap;

  /// Throws ContractError on out-of-range values.
  void validate() const;
};

struct AdamState {
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::uint64_t step_count = 0;

  explicit AdamState(std::size_t n = 0) : first_moment(n, 0.0), second_moment(n, 0.0) {}
};

struct TrainResult {
  ThetaVector theta;
  std::size_t iterations = 0;
  double final_loss = 0.0;
  /// Loss after each step, only filled when requested.
  std::vector<double> loss_trace;
};

/// θ_v = 1 − d(v)/Δ + s, then θ ← θ / max θ.
ThetaVector init_theta(const Graph& g, const TrainConfig& cfg, Rng& rng);

/// One bias-corrected ADAM step followed by projection onto [0,1].
/// Throws NumericalError on a non-finite gradient entry.
void adam_step(AdamState& state, ThetaVector& theta, std::span<const double> grad,
               const TrainConfig& cfg);

/// Minimizes (obj(θ) − target)² from theta0. Stops at max_iters or when the
/// best loss improves by less than plateau_tol for plateau_patience steps.
TrainResult train(const DnnObjective& obj, ThetaVector theta0, const TrainConfig& cfg,
                  std::optional<double> target = std::nullopt, bool keep_trace = false);

/// {v : θ_v ≥ α}, then repaired: for each conflicting edge in ascending order
/// the endpoint of larger degree is dropped (ties: smaller θ, then larger index).
VertexSet extract_set(const Graph& g, const ThetaVector& theta, double alpha);

/// Repeats {build, init, train, extract} on the residual graph left after
/// removing the closed neighborhood of everything found so far, until the
/// union is a maximal independent set of g.
VertexSet solve_mis_dnn(const Graph& g, const TrainConfig& cfg, Rng& rng);

}  // namespace dnnmis
