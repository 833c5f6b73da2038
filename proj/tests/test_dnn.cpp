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


#include "doctest.h"
#include "dnnmis/dnn.hpp"
#include "dnnmis/error.hpp"
#include "support.hpp"

using namespace dnnmis;
using namespace dnnmis::testing;

TEST_CASE("term lists") {
  const auto h = DnnObjective::build(sample5(), Variant::h);
  CHECK(h.edges().size() == 4);
  CHECK(h.comp_edges().size() == 6);
  CHECK(h.penalty_weight() == 5.0);

  const auto f = DnnObjective::build(Graph::from_edges(3, {}), Variant::f);
  CHECK(f.n() == 3);
  CHECK(f.edges().empty());
  CHECK(f.comp_edges().empty());

  const auto k3 = DnnObjective::build(complete(3), Variant::h);
  CHECK(k3.edges().size() == 3);
  CHECK(k3.comp_edges().empty());

  CHECK_THROWS_AS(DnnObjective::build(Graph::from_edges(8, {}), Variant::h, 7), CapacityError);
  CHECK_NOTHROW(DnnObjective::build(Graph::from_edges(8, {}), Variant::f, 7));
}

TEST_CASE("evaluate") {
  const ThetaVector leaves = ThetaVector::indicator(VertexSet(5, {2, 3, 4}));
  CHECK(DnnObjective::build(sample5(), Variant::f).evaluate(leaves) == -1.5);
  CHECK(DnnObjective::build(sample5(), Variant::h).evaluate(leaves) == -4.5);

  const Graph edge = Graph::from_edges(2, {{0, 1}});
  const auto f = DnnObjective::build(edge, Variant::f);
  CHECK(f.evaluate(ThetaVector(std::vector<double>{0.8, 0.9})) == doctest::Approx(0.7));
  CHECK_THROWS_AS(f.evaluate(ThetaVector(3, 0.0)), ContractError);
}

TEST_CASE("default targets") {
  CHECK(DnnObjective::build(sample5(), Variant::f).default_target() == -2.5);
  CHECK(DnnObjective::build(sample5(), Variant::h).default_target() == -12.5);
}

TEST_CASE("gradient") {
  const Graph edge = Graph::from_edges(2, {{0, 1}});
  const auto g = DnnObjective::build(edge, Variant::f).gradient(ThetaVector(std::vector<double>{0.8, 0.9}));
  CHECK(g[0] == doctest::Approx(1.0));
  CHECK(g[1] == doctest::Approx(1.0));

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph r = random_er(rng, 1, 10, {0.2, 0.5, 0.8});
    for (Variant v : {Variant::f, Variant::h}) {
      for (double d : DnnObjective::build(r, v).gradient(ThetaVector(r.n(), 0.0))) CHECK(d == 0.0);
    }
  }
}

TEST_CASE("gradient matches central differences on the five-vertex sample") {
  const Graph g = sample5();
  const auto h = DnnObjective::build(g, Variant::h);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ThetaVector t = theta_off_kinks(g.n(), rng);
    const auto analytic = h.gradient(t);
    const auto numeric = central_difference([&](const ThetaVector& x) { return h.evaluate(x); }, t);
    for (std::size_t i = 0; i < g.n(); ++i) CHECK(relative_error(analytic[i], numeric[i]) <= 1e-6);
  }
}

TEST_CASE("loss") {
  const auto h = DnnObjective::build(sample5(), Variant::h);
  const ThetaVector leaves = ThetaVector::indicator(VertexSet(5, {2, 3, 4}));
  CHECK(h.loss(leaves, -12.5) == 64.0);
  CHECK(h.loss(leaves, -4.5) == 0.0);
  for (double d : h.loss_gradient(leaves, -4.5)) CHECK(d == 0.0);

  Rng rng(8);
  const ThetaVector t = theta_off_kinks(5, rng);
  const auto analytic = h.loss_gradient(t, -12.5);
  const auto numeric = central_difference([&](const ThetaVector& x) { return h.loss(x, -12.5); }, t);
  for (std::size_t i = 0; i < 5; ++i) CHECK(relative_error(analytic[i], numeric[i]) <= 1e-6);

  std::vector<double> out(5);
  CHECK(h.loss_gradient(t, -12.5, out) == doctest::Approx(h.evaluate(t)));
  CHECK(out == analytic);
}

TEST_CASE("objective agrees with a direct evaluation of its definition") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_er(rng, 1, 10, {0.1, 0.3, 0.5, 0.7});
    ThetaVector t(g.n(), 0.0);
    for (std::size_t i = 0; i < g.n(); ++i) t[i] = rng.uniform();
    for (Variant v : {Variant::f, Variant::h}) {
      CHECK(DnnObjective::build(g, v).evaluate(t) == doctest::Approx(reference_objective(g, t, v)));
    }
  }
}

TEST_CASE("h never exceeds f") {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_er(rng, 1, 12, {0.1, 0.3, 0.5});
    ThetaVector t(g.n(), 0.0);
    for (std::size_t i = 0; i < g.n(); ++i) t[i] = rng.uniform();
    CHECK(DnnObjective::build(g, Variant::h).evaluate(t) <=
          DnnObjective::build(g, Variant::f).evaluate(t));
  }
}

TEST_CASE("binary evaluation on independent sets") {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_er(rng, 1, 10, {0.2, 0.4, 0.6});
    const std::uint64_t bits = rng.below(std::uint64_t{1} << g.n());
    if (!independent_by_edges(g, bits)) continue;
    const VertexSet s = subset_of(g.n(), bits);
    const ThetaVector t = ThetaVector::indicator(s);
    const Graph gc = complement(g);
    std::size_t inner = 0;
    for (const Edge& e : gc.edges()) inner += s.contains(e.u) && s.contains(e.v);
    const double k = static_cast<double>(s.size());
    CHECK(DnnObjective::build(g, Variant::f).evaluate(t) == -k / 2);
    CHECK(DnnObjective::build(g, Variant::h).evaluate(t) == -k / 2 - static_cast<double>(inner));
  }
}

TEST_CASE("slope along a coordinate equals the reported subgradient") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_er(rng, 2, 9, {0.3, 0.6});
    const auto obj = DnnObjective::build(g, Variant::h);
    const ThetaVector t = theta_off_kinks(g.n(), rng);
    const auto grad = obj.gradient(t);
    const double eps = 1e-7;
    for (std::size_t i = 0; i < g.n(); ++i) {
      ThetaVector s = t;
      s[i] += eps;
      CHECK(relative_error(grad[i], (obj.evaluate(s) - obj.evaluate(t)) / eps) <= 1e-5);
    }
  }
}

TEST_CASE("projection") {
  ThetaVector t(std::vector<double>{-0.5, 0.3, 1.7});
  t.project();
  CHECK(t[0] == 0.0);
  CHECK(t[1] == 0.3);
  CHECK(t[2] == 1.0);
}
