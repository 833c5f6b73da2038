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

#include <string>
#include <string_view>

#include "dnnmis/graph.hpp"
#include "dnnmis/report.hpp"

namespace dnnmis {

enum class GraphFormat { edgelist, dimacs };

/// Throws MalformedInput for anything but "edgelist" or "dimacs".
GraphFormat parse_format(const std::string& text);

/// SNAP-style text: one "u v" pair per line, separated by whitespace or
/// commas; extra columns are ignored; '#' and '%' start comment lines.
/// Identifiers are arbitrary tokens, compacted to dense indices in order of
/// first appearance and kept as labels.
Graph parse_edge_list(std::string_view text);
/// Edges by label, one per line. Isolated vertices are not representable.
std::string write_edge_list(const Graph& g);

/// "p edge n m" then m lines "e u v" (1-based); 'c' lines are comments.
Graph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

Graph read_graph_file(const std::string& path, GraphFormat format);
void write_graph_file(const Graph& g, const std::string& path, GraphFormat format);

/// JSON with a fixed field order. When g is given, valid/maximal are
/// recomputed from solution_set instead of trusting the stored flags.
std::string write_report(const SolveReport& r, const Graph* g = nullptr);
/// Inverse of write_report; solution_set is rebuilt with host size n
/// when the "solution_index" field is present.
SolveReport parse_report(std::string_view json_text);

}  // namespace dnnmis
