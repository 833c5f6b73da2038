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

// Command-line front end; talks to the solver only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dnnmis/dnnmis.h"

namespace {

int report_failure(dnnmis_status status) {
  std::cerr << "error: " << dnnmis_last_error() << "\n";
  return static_cast<int>(status);
}

struct GraphHandle {
  dnnmis_graph* g = nullptr;
  ~GraphHandle() { dnnmis_graph_free(g); }
};

struct ReportHandle {
  dnnmis_report* r = nullptr;
  ~ReportHandle() { dnnmis_report_free(r); }
};

const std::map<std::string, dnnmis_format> kFormats{{"edgelist", DNNMIS_EDGELIST},
                                                    {"dimacs", DNNMIS_DIMACS}};
const std::map<std::string, dnnmis_problem> kProblems{
    {"mis", DNNMIS_MIS}, {"mc", DNNMIS_MC}, {"mvc", DNNMIS_MVC}};
const std::map<std::string, dnnmis_model> kModels{
    {"er", DNNMIS_ER}, {"ba", DNNMIS_BA}, {"hk", DNNMIS_HK}, {"sbm", DNNMIS_SBM}};

std::string default_data_dir() {
  const char* env = std::getenv("DNNMIS_DATA_DIR");
  return env != nullptr ? env : "data";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum independent set, clique and vertex cover by dataless neural networks"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve mis, mc or mvc on a graph file");
  dnnmis_solve_options opts;
  dnnmis_solve_options_init(&opts);
  std::string input;
  std::string output;
  dnnmis_format format = DNNMIS_EDGELIST;
  bool no_lp = false;
  bool no_communities = false;
  bool no_improve = false;
  bool no_two_improvement = false;
  bool lcc = false;
  solve->add_option("--problem", opts.problem, "mis, mc or mvc")
      ->transform(CLI::CheckedTransformer(kProblems, CLI::ignore_case));
  solve->add_option("--input", input, "graph file")->required();
  solve->add_option("--format", format, "edgelist or dimacs")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  solve->add_option("--alpha", opts.alpha, "extraction threshold")->capture_default_str();
  solve->add_option("--lr", opts.learning_rate, "ADAM learning rate")->capture_default_str();
  solve->add_option("--seed", opts.seed, "random seed")->capture_default_str();
  solve->add_option("--resolution", opts.resolution, "Louvain resolution (default: by density)");
  solve->add_flag("--no-lp", no_lp, "skip the LP reduction");
  solve->add_flag("--no-communities", no_communities, "solve the graph as one community");
  solve->add_flag("--no-improve", no_improve, "skip the dNN improvement loop");
  solve->add_flag("--no-two-improvement", no_two_improvement, "skip the 2-improvement local search");
  solve->add_option("--lambda0", opts.lambda0, "initial removal count of the improvement loop")
      ->capture_default_str();
  solve->add_option("--time-limit", opts.time_limit_seconds, "improvement-loop time budget (s)");
  solve->add_option("--restarts", opts.restarts, "independent seeded runs, best kept")
      ->capture_default_str();
  solve->add_option("--workers", opts.workers, "threads for restarts or per-community solves")
      ->capture_default_str();
  solve->add_flag("--lcc", lcc, "restrict to the largest connected component");
  solve->add_option("--output", output, "report path (default: stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random graph");
  dnnmis_gen_params params;
  dnnmis_gen_params_init(&params);
  std::string gen_output;
  dnnmis_format gen_format = DNNMIS_EDGELIST;
  gen->add_option("--model", params.model, "er, ba, hk or sbm")
      ->required()
      ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
  gen->add_option("--n", params.n, "vertex count")->required();
  gen->add_option("--p", params.p, "edge (er) or intra-block (sbm) probability");
  gen->add_option("--m-attach", params.m_attach, "edges per new vertex (ba, hk)");
  gen->add_option("--pt", params.p_triangle, "triangle probability (hk)");
  gen->add_option("--blocks", params.blocks, "block count (sbm)");
  gen->add_option("--q", params.q, "inter-block probability (sbm)");
  gen->add_option("--seed", params.seed, "random seed")->required();
  gen->add_option("--format", gen_format, "edgelist or dimacs")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  gen->add_option("--output", gen_output, "graph path")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact MIS by branch and bound (n <= 26)");
  std::string oracle_input;
  dnnmis_format oracle_format = DNNMIS_EDGELIST;
  oracle->add_option("--input", oracle_input, "graph file")->required();
  oracle->add_option("--format", oracle_format, "edgelist or dimacs")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  std::string suite = "synthetic";
  std::size_t seeds = 2;
  std::string bench_output;
  std::string data_dir = default_data_dir();
  dnnmis_solve_options bench_opts;
  dnnmis_solve_options_init(&bench_opts);
  bench->add_option("--suite", suite, "synthetic, snap or citation")
      ->check(CLI::IsMember({"synthetic", "snap", "citation"}))
      ->capture_default_str();
  bench->add_option("--seeds", seeds, "seeds per instance")->capture_default_str();
  bench->add_option("--data-dir", data_dir, "dataset directory (env DNNMIS_DATA_DIR)")
      ->capture_default_str();
  bench->add_option("--restarts", bench_opts.restarts, "independent seeded runs, best kept")
      ->capture_default_str();
  bench->add_option("--workers", bench_opts.workers, "threads for restarts or per-community solves");
  bench->add_option("--output", bench_output, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(DNNMIS_INVALID_INPUT);
  }

  if (solve->parsed()) {
    opts.use_lp = !no_lp;
    opts.use_communities = !no_communities;
    opts.use_improve = !no_improve;
    opts.use_two_improvement = !no_two_improvement;
    opts.input_name = input.c_str();
    GraphHandle g;
    if (auto s = dnnmis_graph_load(input.c_str(), format, lcc ? 1 : 0, &g.g); s != DNNMIS_OK) {
      return report_failure(s);
    }
    ReportHandle r;
    if (auto s = dnnmis_solve(g.g, &opts, &r.r); s != DNNMIS_OK) return report_failure(s);
    if (output.empty()) {
      std::cout << dnnmis_report_json(r.r);
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << output << "'\n";
        return static_cast<int>(DNNMIS_INVALID_INPUT);
      }
      out << dnnmis_report_json(r.r);
      std::cerr << "size " << dnnmis_report_size(r.r) << " -> " << output << "\n";
    }
    return 0;
  }

  if (gen->parsed()) {
    GraphHandle g;
    if (auto s = dnnmis_generate(&params, &g.g); s != DNNMIS_OK) return report_failure(s);
    if (auto s = dnnmis_graph_write(g.g, gen_output.c_str(), gen_format); s != DNNMIS_OK) {
      return report_failure(s);
    }
    std::cerr << "n " << dnnmis_graph_n(g.g) << " m " << dnnmis_graph_m(g.g) << " -> " << gen_output
              << "\n";
    return 0;
  }

  if (oracle->parsed()) {
    GraphHandle g;
    if (auto s = dnnmis_graph_load(oracle_input.c_str(), oracle_format, 0, &g.g); s != DNNMIS_OK) {
      return report_failure(s);
    }
    std::size_t size = 0;
    std::vector<std::uint32_t> witness(dnnmis_graph_n(g.g));
    if (auto s = dnnmis_oracle_mis(g.g, &size, witness.data()); s != DNNMIS_OK) {
      return report_failure(s);
    }
    std::cout << "{\"n\": " << dnnmis_graph_n(g.g) << ", \"m\": " << dnnmis_graph_m(g.g)
              << ", \"mis\": " << size << ", \"witness\": [";
    for (std::size_t i = 0; i < size; ++i) std::cout << (i ? ", " : "") << witness[i];
    std::cout << "]}\n";
    return 0;
  }

  if (auto s = dnnmis_bench(suite.c_str(), seeds, data_dir.c_str(), &bench_opts,
                            bench_output.c_str());
      s != DNNMIS_OK) {
    return report_failure(s);
  }
  std::cerr << "results -> " << bench_output << "\n";
  return 0;
}
