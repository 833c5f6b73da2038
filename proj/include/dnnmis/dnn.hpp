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

#include <span>
#include <string_view>
#include <vector>

#include "dnnmis/graph.hpp"

namespace dnnmis {

/// f: node rewards plus edge penalties. h: f plus complement-edge rewards.
enum class Variant { f, h };

std::string_view to_string(Variant v);

/// Trainable parameters, one per vertex, each kept in [0,1].
class ThetaVector {
 public:
  ThetaVector() = default;
  explicit ThetaVector(std::vector<double> values) : values_(std::move(values)) {}
  ThetaVector(std::size_t n, double fill) : values_(n, fill) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  /// Clamps every entry into [0,1].
  void project();

  /// Binary indicator of s.
  static ThetaVector indicator(const VertexSet& s);

 private:
  std::vector<double> values_;
};

/// The dataless network of a graph, held as term lists rather than as the
/// layered W/b/w matrices it is equivalent to:
///
///   f(θ) = −Σ_v σ(θ_v − 1/2) + n Σ_{(u,v)∈E} σ(θ_u + θ_v − 1)
///   h(θ) = f(θ) − Σ_{(u,v)∈E(G')} σ(θ_u + θ_v − 1)
///
/// with σ the ReLU. The minimum of f over [0,1]^n is −k/2 and that of h is
/// −k²/2, k the independence number.
class DnnObjective {
 public:
  /// Throws CapacityError for Variant::h when g.n() > complement_cap.
  static DnnObjective build(const Graph& g, Variant variant,
                            std::size_t complement_cap = kDefaultComplementCap);

  std::size_t n() const { return n_; }
  Variant variant() const { return variant_; }
  double penalty_weight() const { return penalty_weight_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Edge> comp_edges() const { return comp_edges_; }

  /// −n/2 for f, −n²/2 for h; never attained unless g is a null graph.
  double default_target() const;

  double evaluate(const ThetaVector& theta) const;

  /// Closed-form subgradient; ReLU kinks contribute 0.
  std::vector<double> gradient(const ThetaVector& theta) const;
  void gradient(const ThetaVector& theta, std::span<double> out) const;

  /// (evaluate − target)².
  double loss(const ThetaVector& theta, double target) const;
  std::vector<double> loss_gradient(const ThetaVector& theta, double target) const;
  /// Fills out with the loss gradient and returns the objective value.
  double loss_gradient(const ThetaVector& theta, double target, std::span<double> out) const;

 private:
  void check_length(std::size_t len) const;

  std::size_t n_ = 0;
  Variant variant_ = Variant::f;
  double penalty_weight_ = 0.0;
  std::vector<Edge> edges_;
  std::vector<Edge> comp_edges_;
};

}  // namespace dnnmis
