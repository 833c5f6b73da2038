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


#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "dnnmis/error.hpp"
#include "dnnmis/io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace dnnmis;
using namespace dnnmis::testing;

namespace {

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const MalformedInput& e) {
    return e.what();
  }
  return "";
}

SolveReport sample_report() {
  SolveReport r;
  r.problem = "mis";
  r.input = "sample5.txt";
  r.n = 5;
  r.m = 4;
  r.solver = {"h", 0.5, 0.1, 7, 1.3, 5};
  r.phases = {{"dnn", 3, 0.25}, {"verify", 3, 0.0}};
  r.solution_set = VertexSet(5, {2, 3, 4});
  r.solution = {"2", "3", "4"};
  r.size = 3;
  r.valid = true;
  r.maximal = true;
  r.wall_seconds = 0.5;
  r.provenance.density = 0.4;
  r.provenance.community_sizes = {2, 3};
  r.provenance.improve_trace = {3, 3};
  r.provenance.restarts = 4;
  r.provenance.best_restart = 2;
  return r;
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# c\n1 2\n2 1\n");
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
  CHECK(g.label(0) == "1");

  CHECK(parse_edge_list("").n() == 0);
  CHECK(parse_edge_list("a,b\nb,c\n").m() == 2);
  CHECK(parse_edge_list("% konect\n10\t20\t1\t1055\n").m() == 1);
  CHECK(parse_edge_list("5 5\n").n() == 1);

  const std::string msg = error_of([] { parse_edge_list("1 2\n3\n"); });
  CHECK(msg.find("line 2") != std::string::npos);
}

TEST_CASE("dimacs parsing") {
  const Graph p3 = parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(p3.n() == 3);
  CHECK(p3.edges() == path(3).edges());
  CHECK_THROWS_AS(parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\n"), MalformedInput);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), MalformedInput);
  CHECK(error_of([] { parse_dimacs("p edge 3 1\ne 1 4\n"); }).find("line 2") != std::string::npos);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nx 1 2\n"), MalformedInput);
}

TEST_CASE("graph round trips") {
  Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_er(rng, 1, 30, {0.1, 0.4});
    CHECK(parse_dimacs(write_dimacs(g)).edges() == g.edges());
    CHECK(parse_dimacs(write_dimacs(g)).n() == g.n());
    // Isolated vertices have no line in an edge list, so compare on labels.
    const Graph back = parse_edge_list(write_edge_list(g));
    CHECK(back.m() == g.m());
    for (const Edge& e : back.edges()) {
      CHECK(g.has_edge(static_cast<Vertex>(std::stoul(back.label(e.u))),
                       static_cast<Vertex>(std::stoul(back.label(e.v)))));
    }
  }
  const Graph f = sample5();
  CHECK(parse_edge_list(write_edge_list(f)).edges() == f.edges());
}

TEST_CASE("graph files") {
  const auto dir = std::filesystem::temp_directory_path() / "dnnmis_io_test";
  std::filesystem::create_directories(dir);
  const std::string path_txt = (dir / "g.txt").string();
  const std::string path_col = (dir / "g.col").string();
  write_graph_file(sample5(), path_txt, GraphFormat::edgelist);
  write_graph_file(sample5(), path_col, GraphFormat::dimacs);
  CHECK(read_graph_file(path_txt, GraphFormat::edgelist).edges() == sample5().edges());
  CHECK(read_graph_file(path_col, GraphFormat::dimacs).edges() == sample5().edges());
  CHECK_THROWS_AS(read_graph_file((dir / "missing").string(), GraphFormat::edgelist), MalformedInput);
  CHECK(parse_format("dimacs") == GraphFormat::dimacs);
  CHECK_THROWS_AS(parse_format("gml"), MalformedInput);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report schema and round trip") {
  const SolveReport r = sample_report();
  const std::string text = write_report(r, nullptr);
  const auto j = nlohmann::json::parse(text);
  for (const char* key : {"problem", "input", "n", "m", "solver", "phases", "solution", "size",
                          "valid", "maximal", "wall_seconds"}) {
    CHECK(j.contains(key));
  }
  for (const char* key : {"variant", "alpha", "lr", "seed", "resolution", "lambda0"}) {
    CHECK(j["solver"].contains(key));
  }
  CHECK(j["phases"][0]["name"] == "dnn");
  CHECK(j["size"] == j["solution"].size());

  const SolveReport back = parse_report(text);
  CHECK(back.problem == r.problem);
  CHECK(back.input == r.input);
  CHECK(back.solver == r.solver);
  CHECK(back.phases == r.phases);
  CHECK(back.solution == r.solution);
  CHECK(back.solution_set == r.solution_set);
  CHECK(back.size == r.size);
  CHECK(back.provenance == r.provenance);
  CHECK(back.wall_seconds == r.wall_seconds);
  CHECK(write_report(back, nullptr) == text);

  CHECK_THROWS_AS(parse_report("{"), MalformedInput);
  CHECK_THROWS_AS(parse_report("{\"problem\": 3}"), MalformedInput);
}

TEST_CASE("report validity is recomputed against the graph") {
  SolveReport r = sample_report();
  r.solution_set = VertexSet(5, {0, 1});
  r.solution = {"0", "1"};
  r.size = 2;
  const Graph g = sample5();
  const auto j = nlohmann::json::parse(write_report(r, &g));
  CHECK(j["valid"] == false);
  const auto ok = nlohmann::json::parse(write_report(sample_report(), nullptr));
  CHECK(ok["valid"] == true);
}
