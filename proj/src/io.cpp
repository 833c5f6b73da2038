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

#include "dnnmis/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "dnnmis/error.hpp"
#include "json.hpp"

namespace dnnmis {
namespace {

using ordered_json = nlohmann::ordered_json;

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_separator(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    fn(++line_no, text.substr(pos, end - pos));
    pos = end + 1;
  }
}

std::size_t parse_count(std::string_view tok, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw MalformedInput("line " + std::to_string(line_no) + ": bad " + what + " '" +
                         std::string(tok) + "'");
  }
  return value;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

GraphFormat parse_format(const std::string& text) {
  if (text == "edgelist") return GraphFormat::edgelist;
  if (text == "dimacs") return GraphFormat::dimacs;
  throw MalformedInput("unknown graph format '" + text + "' (expected edgelist or dimacs)");
}

Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view tok) {
    auto [it, fresh] = ids.try_emplace(std::string(tok), static_cast<Vertex>(labels.size()));
    if (fresh) labels.emplace_back(tok);
    return it->second;
  };
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#' || toks[0][0] == '%') return;
    if (toks.size() < 2) {
      throw MalformedInput("line " + std::to_string(line_no) + ": expected 'u v', got '" +
                           std::string(line) + "'");
    }
    const Vertex u = intern(toks[0]);
    const Vertex v = intern(toks[1]);
    edges.push_back({u, v});
  });
  // Keep self-loop endpoints as vertices even though the loop itself is dropped.
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += g.label(e.u);
    out += ' ';
    out += g.label(e.v);
    out += '\n';
  }
  return out;
}

Graph parse_dimacs(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t declared = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto toks = tokenize(line);
    if (toks.empty() || toks[0] == "c") return;
    if (toks[0] == "p") {
      if (have_header) throw MalformedInput("line " + std::to_string(line_no) + ": second header");
      if (toks.size() != 4) {
        throw MalformedInput("line " + std::to_string(line_no) + ": expected 'p edge n m'");
      }
      n = parse_count(toks[2], line_no, "vertex count");
      declared = parse_count(toks[3], line_no, "edge count");
      have_header = true;
      return;
    }
    if (toks[0] == "e") {
      if (!have_header) {
        throw MalformedInput("line " + std::to_string(line_no) + ": edge before 'p' header");
      }
      if (toks.size() < 3) throw MalformedInput("line " + std::to_string(line_no) + ": expected 'e u v'");
      const std::size_t u = parse_count(toks[1], line_no, "vertex");
      const std::size_t v = parse_count(toks[2], line_no, "vertex");
      if (u < 1 || v < 1 || u > n || v > n) {
        throw MalformedInput("line " + std::to_string(line_no) + ": vertex outside 1.." +
                             std::to_string(n));
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
      return;
    }
    throw MalformedInput("line " + std::to_string(line_no) + ": unknown record '" +
                         std::string(toks[0]) + "'");
  });
  if (!have_header) throw MalformedInput("missing 'p edge n m' header");
  if (edges.size() != declared) {
    throw MalformedInput("header declares " + std::to_string(declared) + " edges but " +
                         std::to_string(edges.size()) + " are listed");
  }
  return Graph::from_edges(n, edges);
}

std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  const std::string text = slurp(path);
  return format == GraphFormat::edgelist ? parse_edge_list(text) : parse_dimacs(text);
}

void write_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write '" + path + "'");
  out << (format == GraphFormat::edgelist ? write_edge_list(g) : write_dimacs(g));
}

std::string write_report(const SolveReport& r, const Graph* g) {
  bool valid = r.valid;
  bool maximal = r.maximal;
  if (g != nullptr) {
    const Verdict v = verify_solution(parse_problem(r.problem), *g, r.solution_set);
    valid = v.valid && r.solution_set.size() == r.solution.size();
    maximal = v.maximal;
  }
  ordered_json j;
  j["problem"] = r.problem;
  j["input"] = r.input;
  j["n"] = r.n;
  j["m"] = r.m;
  j["solver"] = {{"variant", r.solver.variant},       {"alpha", r.solver.alpha},
                 {"lr", r.solver.lr},                 {"seed", r.solver.seed},
                 {"resolution", r.solver.resolution}, {"lambda0", r.solver.lambda0}};
  j["phases"] = ordered_json::array();
  for (const auto& p : r.phases) {
    j["phases"].push_back({{"name", p.name}, {"size_after", p.size_after}, {"seconds", p.seconds}});
  }
  j["solution"] = r.solution;
  j["solution_index"] = std::vector<Vertex>(r.solution_set.begin(), r.solution_set.end());
  j["size"] = r.size;
  j["valid"] = valid;
  j["maximal"] = maximal;
  const Provenance& pv = r.provenance;
  j["provenance"] = {{"density", pv.density},
                     {"lp_applied", pv.lp_applied},
                     {"lp_ones", pv.lp_ones},
                     {"lp_removed", pv.lp_removed},
                     {"residual_n", pv.residual_n},
                     {"community_sizes", pv.community_sizes},
                     {"inter_cluster_edges", pv.inter_cluster_edges},
                     {"forbidden_edges", pv.forbidden_edges},
                     {"repair_swaps", pv.repair_swaps},
                     {"repair_removals", pv.repair_removals},
                     {"improve_rounds", pv.improve_rounds},
                     {"improve_trace", pv.improve_trace},
                     {"restarts", pv.restarts},
                     {"best_restart", pv.best_restart}};
  j["wall_seconds"] = r.wall_seconds;
  return j.dump(2) + "\n";
}

SolveReport parse_report(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    SolveReport r;
    r.problem = j.at("problem").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    const auto& s = j.at("solver");
    r.solver = {s.at("variant").get<std::string>(), s.at("alpha").get<double>(),
                s.at("lr").get<double>(),           s.at("seed").get<std::uint64_t>(),
                s.at("resolution").get<double>(),   s.at("lambda0").get<std::size_t>()};
    for (const auto& p : j.at("phases")) {
      r.phases.push_back({p.at("name").get<std::string>(), p.at("size_after").get<std::size_t>(),
                          p.at("seconds").get<double>()});
    }
    r.solution = j.at("solution").get<std::vector<std::string>>();
    if (j.contains("solution_index")) {
      r.solution_set = VertexSet(r.n, j.at("solution_index").get<std::vector<Vertex>>());
    }
    r.size = j.at("size").get<std::size_t>();
    r.valid = j.at("valid").get<bool>();
    r.maximal = j.at("maximal").get<bool>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    if (j.contains("provenance")) {
      const auto& pv = j.at("provenance");
      Provenance& out = r.provenance;
      out.density = pv.at("density").get<double>();
      out.lp_applied = pv.at("lp_applied").get<bool>();
      out.lp_ones = pv.at("lp_ones").get<std::size_t>();
      out.lp_removed = pv.at("lp_removed").get<std::size_t>();
      out.residual_n = pv.at("residual_n").get<std::size_t>();
      out.community_sizes = pv.at("community_sizes").get<std::vector<std::size_t>>();
      out.inter_cluster_edges = pv.at("inter_cluster_edges").get<std::size_t>();
      out.forbidden_edges = pv.at("forbidden_edges").get<std::size_t>();
      out.repair_swaps = pv.at("repair_swaps").get<std::size_t>();
      out.repair_removals = pv.at("repair_removals").get<std::size_t>();
      out.improve_rounds = pv.at("improve_rounds").get<std::size_t>();
      out.improve_trace = pv.at("improve_trace").get<std::vector<std::size_t>>();
      out.restarts = pv.at("restarts").get<std::size_t>();
      out.best_restart = pv.at("best_restart").get<std::size_t>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("report does not match the schema: ") + e.what());
  }
}

}  // namespace dnnmis
