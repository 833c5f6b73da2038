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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dnnmis/error.hpp"
#include "dnnmis/gen.hpp"
#include "dnnmis/io.hpp"
#include "dnnmis/pipeline.hpp"

namespace dnnmis {
namespace {

// Pubmed ships as "ID<TAB>paper:A<TAB>|<TAB>paper:B" after two header lines.
Graph parse_pubmed_cites(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::string text;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> toks;
    for (std::string t; fields >> t;) toks.push_back(t);
    if (toks.size() != 4 || toks[2] != "|") continue;
    auto strip = [](const std::string& t) {
      const auto colon = t.find(':');
      return colon == std::string::npos ? t : t.substr(colon + 1);
    };
    text += strip(toks[1]) + ' ' + strip(toks[3]) + '\n';
  }
  return parse_edge_list(text);
}

std::string snap_url(const std::string& file) { return "https://snap.stanford.edu/data/" + file + ".gz"; }

}  // namespace

std::vector<BenchInstance> synthetic_suite() {
  auto sbm5 = [](std::uint64_t s) { return sbm({50, 50, 50, 50, 50}, 0.1, 0.05, s); };
  return {
      {"ER(100,0.1)", [](std::uint64_t s) { return erdos_renyi(100, 0.1, s); }},
      {"ER(100,0.2)", [](std::uint64_t s) { return erdos_renyi(100, 0.2, s); }},
      {"ER(200,0.1)", [](std::uint64_t s) { return erdos_renyi(200, 0.1, s); }},
      {"BA(100)", [](std::uint64_t s) { return barabasi_albert(100, 45, s); }},
      {"HK(100)", [](std::uint64_t s) { return holme_kim(100, 30, 0.5, s); }},
      {"SBM(250,0.1)", sbm5},
  };
}

std::vector<Dataset> dataset_suite(const std::string& suite) {
  const std::string planetoid = "https://linqs-data.soe.ucsc.edu/public/lbc/";
  if (suite == "citation") {
    return {{"Cora", "cora.cites", planetoid + "cora.tgz (extract cora/cora.cites)"},
            {"Citeseer", "citeseer.cites", planetoid + "citeseer.tgz (extract citeseer/citeseer.cites)"},
            {"PubMed", "Pubmed-Diabetes.DIRECTED.cites.tab",
             planetoid + "Pubmed-Diabetes.tgz (extract data/Pubmed-Diabetes.DIRECTED.cites.tab)"}};
  }
  if (suite == "snap") {
    std::vector<Dataset> out;
    for (const char* f : {"soc-sign-bitcoinalpha.csv", "soc-sign-bitcoinotc.csv", "wiki-Vote.txt",
                          "soc-Slashdot0811.txt", "soc-Slashdot0902.txt", "soc-Epinions1.txt"}) {
      std::string name = f;
      name = name.substr(0, name.rfind('.'));
      out.push_back({name, f, snap_url(f) + " (gunzip)"});
    }
    return out;
  }
  throw MalformedInput("unknown suite '" + suite + "' (expected synthetic, snap or citation)");
}

Graph load_dataset(const Dataset& d, const std::string& data_dir) {
  const std::filesystem::path path = std::filesystem::path(data_dir) / d.file;
  if (!std::filesystem::exists(path)) {
    throw MalformedInput("dataset " + d.name + " not found at " + path.string() +
                         "; download it from " + d.url + " into " + data_dir +
                         " (or pass --data-dir / set DNNMIS_DATA_DIR)");
  }
  if (d.file.ends_with(".tab")) return parse_pubmed_cites(path.string());
  return read_graph_file(path.string(), GraphFormat::edgelist);
}

std::vector<BenchRow> bench(const BenchOptions& opts, const SolveConfig& base) {
  if (opts.seeds == 0) throw ContractError("bench needs at least one seed");
  auto wanted = [&](const std::string& name) {
    return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), name) != opts.only.end();
  };
  std::vector<BenchRow> rows;
  auto run = [&](const std::string& instance, const std::string& kind, const Graph& g,
                 std::uint64_t seed) {
    SolveConfig cfg = base;
    cfg.seed = seed;
    cfg.input_name = instance;
    const SolveReport r = solve(ProblemKind::mis, g, cfg);
    rows.push_back({opts.suite, instance, kind, seed, g.n(), g.m(), r.size, r.valid && r.maximal,
                    r.wall_seconds});
  };

  if (opts.suite == "synthetic") {
    for (const auto& inst : synthetic_suite()) {
      if (!wanted(inst.name)) continue;
      for (std::uint64_t s = 1; s <= opts.seeds; ++s) run(inst.name, "generated", inst.make(s), s);
    }
    return rows;
  }
  for (const auto& d : dataset_suite(opts.suite)) {
    if (!wanted(d.name)) continue;
    const Graph raw = load_dataset(d, opts.data_dir);
    const Graph lcc = largest_component_graph(raw);
    for (std::uint64_t s = 1; s <= opts.seeds; ++s) {
      run(d.name, "raw", raw, s);
      run(d.name, "lcc", lcc, s);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "suite,instance,graph,seed,n,m,size,valid,seconds\n";
  struct Acc {
    const BenchRow* first = nullptr;
    double n = 0, m = 0, size = 0, seconds = 0;
    bool valid = true;
    std::size_t count = 0;
  };
  std::vector<std::pair<std::string, Acc>> groups;
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    out << r.suite << ',' << r.instance << ',' << r.graph << ',' << r.seed << ',' << r.n << ','
        << r.m << ',' << r.size << ',' << (r.valid ? "true" : "false") << ',' << buf << '\n';
    const std::string key = r.instance + '\x1f' + r.graph;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.push_back({key, Acc{&r}});
      it = groups.end() - 1;
    }
    Acc& a = it->second;
    a.n += r.n;
    a.m += r.m;
    a.size += r.size;
    a.seconds += r.seconds;
    a.valid = a.valid && r.valid;
    ++a.count;
  }
  for (const auto& [key, a] : groups) {
    const double k = static_cast<double>(a.count);
    std::snprintf(buf, sizeof buf, "%.1f,%.1f,%.2f,%s,%.3f", a.n / k, a.m / k, a.size / k,
                  a.valid ? "true" : "false", a.seconds / k);
    out << a.first->suite << ',' << a.first->instance << ',' << a.first->graph << ",mean," << buf
        << '\n';
  }
  return out.str();
}

}  // namespace dnnmis
