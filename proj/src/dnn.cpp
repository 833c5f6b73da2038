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

#include "dnnmis/dnn.hpp"

#include <algorithm>
#include <string>

#include "dnnmis/error.hpp"

namespace dnnmis {
namespace {

double relu(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::f ? "f" : "h"; }

void ThetaVector::project() {
  for (double& x : values_) x = std::clamp(x, 0.0, 1.0);
}

ThetaVector ThetaVector::indicator(const VertexSet& s) {
  ThetaVector t(s.host_n(), 0.0);
  for (Vertex v : s) t[v] = 1.0;
  return t;
}

DnnObjective DnnObjective::build(const Graph& g, Variant variant, std::size_t complement_cap) {
  DnnObjective obj;
  obj.n_ = g.n();
  obj.variant_ = variant;
  obj.penalty_weight_ = static_cast<double>(g.n());
  obj.edges_ = g.edges();
  if (variant == Variant::h) {
    if (g.n() > complement_cap) {
      throw CapacityError("h-objective needs the complement of a " + std::to_string(g.n()) +
                          "-vertex graph (cap " + std::to_string(complement_cap) +
                          "); use the f-objective");
    }
    obj.comp_edges_ = complement(g, complement_cap).edges();
  }
  return obj;
}

double DnnObjective::default_target() const {
  const double n = static_cast<double>(n_);
  return variant_ == Variant::f ? -n / 2.0 : -n * n / 2.0;
}

void DnnObjective::check_length(std::size_t len) const {
  if (len != n_) {
    throw ContractError("theta has " + std::to_string(len) + " entries, objective expects " +
                        std::to_string(n_));
  }
}

double DnnObjective::evaluate(const ThetaVector& theta) const {
  check_length(theta.size());
  double nodes = 0.0;
  for (std::size_t v = 0; v < n_; ++v) nodes += relu(theta[v] - 0.5);
  double penalty = 0.0;
  for (const Edge& e : edges_) penalty += relu(theta[e.u] + theta[e.v] - 1.0);
  double reward = 0.0;
  for (const Edge& e : comp_edges_) reward += relu(theta[e.u] + theta[e.v] - 1.0);
  return -nodes + penalty_weight_ * penalty - reward;
}

void DnnObjective::gradient(const ThetaVector& theta, std::span<double> out) const {
  check_length(theta.size());
  check_length(out.size());
  for (std::size_t v = 0; v < n_; ++v) out[v] = theta[v] > 0.5 ? -1.0 : 0.0;
  for (const Edge& e : edges_) {
    if (theta[e.u] + theta[e.v] > 1.0) {
      out[e.u] += penalty_weight_;
      out[e.v] += penalty_weight_;
    }
  }
  for (const Edge& e : comp_edges_) {
    if (theta[e.u] + theta[e.v] > 1.0) {
      out[e.u] -= 1.0;
      out[e.v] -= 1.0;
    }
  }
}

std::vector<double> DnnObjective::gradient(const ThetaVector& theta) const {
  std::vector<double> out(n_);
  gradient(theta, out);
  return out;
}

double DnnObjective::loss(const ThetaVector& theta, double target) const {
  const double gap = evaluate(theta) - target;
  return gap * gap;
}

double DnnObjective::loss_gradient(const ThetaVector& theta, double target,
                                   std::span<double> out) const {
  const double value = evaluate(theta);
  gradient(theta, out);
  const double scale = 2.0 * (value - target);
  for (double& g : out) g *= scale;
  return value;
}

std::vector<double> DnnObjective::loss_gradient(const ThetaVector& theta, double target) const {
  std::vector<double> out(n_);
  loss_gradient(theta, target, out);
  return out;
}

}  // namespace dnnmis
