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

#include "dnnmis/dnn.hpp"
#include "dnnmis/graph.hpp"

namespace dnnmis {

inline constexpr std::size_t kOracleMisCap = 26;
inline constexpr std::size_t kOracleObjectiveCap = 16;

struct OracleResult {
  std::size_t size = 0;
  VertexSet witness;
  /// Search-tree nodes visited.
  std::uint64_t enumerated = 0;
};

/// Exact maximum independent set by bitmask branch and bound.
/// Throws CapacityError for n > 26.
OracleResult exact_mis(const Graph& g);

/// min over θ ∈ {0,1}^n of the objective. Throws CapacityError for n > 16.
double exact_min_objective(const Graph& g, Variant variant);

}  // namespace dnnmis
