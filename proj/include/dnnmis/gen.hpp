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
#include <vector>

#include "dnnmis/graph.hpp"

namespace dnnmis {

/// G(n, p): every pair independently with probability p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment from a core of m_attach isolated vertices; each
/// newcomer links to m_attach distinct existing vertices. m = (n − m_attach)·m_attach.
Graph barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed);

/// Holme–Kim powerlaw-cluster model: as barabasi_albert, but after each
/// preferential edge, with probability p_triangle the next edge closes a
/// triangle through a neighbor of the last target.
Graph holme_kim(std::size_t n, std::size_t m_attach, double p_triangle, std::uint64_t seed);

/// Stochastic block model with consecutive blocks.
Graph sbm(const std::vector<std::size_t>& block_sizes, double p_intra, double q_inter,
          std::uint64_t seed);

}  // namespace dnnmis
