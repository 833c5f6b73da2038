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

#include "dnnmis/train.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dnnmis/error.hpp"

namespace dnnmis {

void TrainConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ContractError("alpha must lie in (0,1)");
  if (!(learning_rate > 0.0)) throw ContractError("learning rate must be positive");
  if (!(noise_bound >= 0.0 && noise_bound < 0.1)) {
    throw ContractError("noise bound must lie in [0, 0.1)");
  }
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0 && adam_beta2 >= 0.0 && adam_beta2 < 1.0)) {
    throw ContractError("ADAM betas must lie in [0,1)");
  }
  if (!(adam_eps > 0.0)) throw ContractError("ADAM epsilon must be positive");
}

ThetaVector init_theta(const Graph& g, const TrainConfig& cfg, Rng& rng) {
  const std::size_t n = g.n();
  ThetaVector theta(n, 0.0);
  const double max_deg = static_cast<double>(g.max_degree());
  double top = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    const double ratio = max_deg > 0.0 ? static_cast<double>(g.degree(v)) / max_deg : 0.0;
    // Per-vertex noise: a shared scalar would leave regular graphs perfectly
    // symmetric for the whole run.
    const double s = cfg.noise_bound > 0.0 ? cfg.noise_bound * rng.uniform_open_closed() : 0.0;
    theta[v] = 1.0 - ratio + s;
    top = std::max(top, theta[v]);
  }
  if (top > 0.0) {
    for (Vertex v = 0; v < n; ++v) theta[v] /= top;
  } else {
    // Noise-free regular graph: every entry is 0/0, take the symmetric limit.
    theta = ThetaVector(n, 1.0);
  }
  theta.project();
  return theta;
}

void adam_step(AdamState& state, ThetaVector& theta, std::span<const double> grad,
               const TrainConfig& cfg) {
  const std::size_t n = theta.size();
  if (grad.size() != n || state.first_moment.size() != n || state.second_moment.size() != n) {
    throw ContractError("ADAM state, theta and gradient lengths disagree");
  }
  ++state.step_count;
  const double t = static_cast<double>(state.step_count);
  const double correct1 = 1.0 - std::pow(cfg.adam_beta1, t);
  const double correct2 = 1.0 - std::pow(cfg.adam_beta2, t);
  for (std::size_t i = 0; i < n; ++i) {
    const double g = grad[i];
    if (!std::isfinite(g)) {
      throw NumericalError("non-finite gradient at coordinate " + std::to_string(i));
    }
    double& m = state.first_moment[i];
    double& v = state.second_moment[i];
    m = cfg.adam_beta1 * m + (1.0 - cfg.adam_beta1) * g;
    v = cfg.adam_beta2 * v + (1.0 - cfg.adam_beta2) * g * g;
    const double m_hat = m / correct1;
    const double v_hat = v / correct2;
    theta[i] = std::clamp(theta[i] - cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.adam_eps),
                          0.0, 1.0);
  }
}

TrainResult train(const DnnObjective& obj, ThetaVector theta0, const TrainConfig& cfg,
                  std::optional<double> target, bool keep_trace) {
  const double goal = target.value_or(obj.default_target());
  TrainResult result;
  result.theta = std::move(theta0);
  result.theta.project();
  AdamState state(obj.n());
  std::vector<double> grad(obj.n());

  double best = obj.loss(result.theta, goal);
  double current = best;
  std::size_t stalled = 0;
  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    obj.loss_gradient(result.theta, goal, grad);
    adam_step(state, result.theta, grad, cfg);
    current = obj.loss(result.theta, goal);
    if (keep_trace) result.loss_trace.push_back(current);
    ++result.iterations;
    if (best - current < cfg.plateau_tol) {
      ++stalled;
    } else {
      stalled = 0;
    }
    best = std::min(best, current);
    if (stalled >= cfg.plateau_patience) break;
  }
  result.final_loss = current;
  return result;
}

VertexSet extract_set(const Graph& g, const ThetaVector& theta, double alpha) {
  const std::size_t n = g.n();
  if (theta.size() != n) throw ContractError("theta length does not match graph");
  std::vector<bool> keep(n);
  for (Vertex v = 0; v < n; ++v) keep[v] = theta[v] >= alpha;

  // True when a should be dropped in favor of b.
  auto drop_first = [&](Vertex a, Vertex b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    if (theta[a] != theta[b]) return theta[a] < theta[b];
    return a > b;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (!keep[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || !keep[v]) continue;
      if (drop_first(u, v)) {
        keep[u] = false;
        break;
      }
      keep[v] = false;
    }
  }
  return VertexSet::from_mask(keep);
}

VertexSet solve_mis_dnn(const Graph& g, const TrainConfig& cfg, Rng& rng) {
  cfg.validate();
  std::vector<bool> chosen(g.n(), false);
  Subgraph residual(g, [&] {
    std::vector<Vertex> id(g.n());
    for (Vertex v = 0; v < g.n(); ++v) id[v] = v;
    return id;
  }());

  while (residual.graph().n() > 0) {
    const Graph& cur = residual.graph();
    const Variant variant = cur.n() <= cfg.complement_cap ? Variant::h : Variant::f;
    const auto obj = DnnObjective::build(cur, variant, cfg.complement_cap);
    const auto fit = train(obj, init_theta(cur, cfg, rng), cfg);
    VertexSet found = extract_set(cur, fit.theta, cfg.alpha);
    if (found.empty()) {
      // Nothing crossed the threshold; take the strongest vertex so every
      // round makes progress.
      Vertex best = 0;
      for (Vertex v = 1; v < cur.n(); ++v) {
        const double a = fit.theta[v];
        const double b = fit.theta[best];
        if (a > b || (a == b && cur.degree(v) < cur.degree(best))) best = v;
      }
      found = VertexSet(cur.n(), {best});
    }
    for (Vertex v : found) chosen[residual.parent_of(v)] = true;

    Subgraph next = remove_closed_neighborhood(cur, found);
    std::vector<Vertex> to_root;
    to_root.reserve(next.graph().n());
    for (Vertex v : next.to_parent()) to_root.push_back(residual.parent_of(v));
    residual = Subgraph(next.graph(), std::move(to_root));
  }
  return VertexSet::from_mask(chosen);
}

}  // namespace dnnmis
