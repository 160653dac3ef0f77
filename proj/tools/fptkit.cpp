#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpt/bench.hpp"
#include "fpt/color_coding.hpp"
#include "fpt/compression.hpp"
#include "fpt/decomposition.hpp"
#include "fpt/errors.hpp"
#include "fpt/generators.hpp"
#include "fpt/kernel.hpp"
#include "fpt/localization.hpp"
#include "fpt/oracle.hpp"
#include "fpt/search_tree.hpp"

namespace {

using fpt::graph;
using fpt::vertex;
using json = nlohmann::ordered_json;

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;

// Exhaustive solves run on kernels; their size is bounded by k, not the input.
constexpr int kernel_solve_cap = 24;

struct usage_error : fpt::error {
  using fpt::error::error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write " + path);
  out << text;
  if (!out.flush()) throw usage_error("cannot write " + path);
}

json one_based(const std::vector<vertex>& vs) {
  json a = json::array();
  for (vertex v : vs) a.push_back(v + 1);
  return a;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string answer(bool yes) { return yes ? "YES" : "NO"; }

// k pairwise disjoint triples, first found in index order.
std::optional<std::vector<fpt::triple>> find_matching(const fpt::triple_system& ts, int k) {
  std::vector<char> ua(ts.size_a, 0), ub(ts.size_b, 0), uc(ts.size_c, 0);
  std::vector<fpt::triple> chosen;
  const auto& t = ts.triples;
  auto search = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (std::size_t i = from; i < t.size(); ++i) {
      if (t.size() - i < static_cast<std::size_t>(k) - chosen.size()) return false;
      const auto& x = t[i];
      if (ua[x.a] || ub[x.b] || uc[x.c]) continue;
      ua[x.a] = ub[x.b] = uc[x.c] = 1;
      chosen.push_back(x);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      ua[x.a] = ub[x.b] = uc[x.c] = 0;
    }
    return false;
  };
  if (k <= 0) return chosen;
  if (!search(search, 0)) return std::nullopt;
  return chosen;
}

json triples_json(const std::vector<fpt::triple>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back({t.a, t.b, t.c});
  return a;
}

// ----------------------------------------------------------------------- solve

struct solve_args {
  std::string problem;
  std::string algorithm;
  std::string input;
  std::optional<int> k;
  std::string bd_path;
  std::optional<int> d;
  double delta = 0.01;
  std::uint64_t seed = 0;
};

const std::map<std::string, std::vector<std::string>>& algorithms() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"vc", {"degree", "edge", "path", "compression", "kernel+degree", "decomp-dp"}},
      {"ds", {"degree"}},
      {"kpath", {"colorcode"}},
      {"3col", {"decomp-dp"}},
      {"maxleaf", {"kernel"}},
      {"tripack", {"localization"}},
      {"3dm", {"kernel"}},
      {"nonblocker", {"kernel"}},
  };
  return table;
}

struct solve_record {
  json rec;
  bool yes = false;
};

int run_solve(const solve_args& a) {
  const auto& table = algorithms();
  const auto it = table.find(a.problem);
  if (it == table.end()) throw usage_error("unknown problem: " + a.problem);
  const std::string algo = a.algorithm.empty() ? it->second.front() : a.algorithm;
  if (std::find(it->second.begin(), it->second.end(), algo) == it->second.end()) {
    throw usage_error("algorithm " + algo + " is not available for " + a.problem);
  }
  if (a.problem != "3col" && !a.k) throw usage_error("--k is required for " + a.problem);
  if (!a.bd_path.empty() && algo != "decomp-dp") throw usage_error("--bd only applies to decomp-dp");
  const int k = a.k.value_or(0);

  json rec;
  rec["schema_version"] = fpt::bench::schema_version;
  rec["problem"] = a.problem;
  rec["algorithm"] = algo;
  rec["n"] = nullptr;
  rec["m"] = nullptr;
  rec["k"] = a.k ? json(k) : json(nullptr);
  rec["answer"] = nullptr;
  rec["witness"] = nullptr;
  rec["nodes_expanded"] = nullptr;
  rec["trials"] = nullptr;
  rec["seed"] = nullptr;
  bool yes = false;
  const auto t0 = std::chrono::steady_clock::now();

  if (a.problem == "3dm") {
    const auto ts = fpt::parse_triples(read_file(a.input));
    rec["n"] = ts.size_a + ts.size_b + ts.size_c;
    rec["m"] = ts.triples.size();
    const auto kern = fpt::threedm_kernel(ts, k);
    if (const auto* d = std::get_if<fpt::decided>(&kern)) {
      yes = d->answer;
      if (yes) {
        // Decided YES carries no witness; rebuild one from the full system.
        auto m = find_matching(ts, k);
        if (m) rec["witness"] = triples_json(*m);
      }
    } else {
      const auto& red = std::get<fpt::reduced_triples>(kern);
      auto m = find_matching(red.system, red.k);
      yes = m.has_value();
      if (m) rec["witness"] = triples_json(*m);
    }
  } else {
    const graph g = fpt::parse_graph(read_file(a.input));
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    const fpt::problem_instance inst{g, k};
    auto take_branch = [&](const fpt::branch_result& r) {
      yes = r.yes;
      if (r.witness) rec["witness"] = one_based(*r.witness);
      rec["nodes_expanded"] = r.stats.nodes_expanded;
    };
    if (a.problem == "vc" && algo == "edge") {
      take_branch(fpt::vc_edge_branch(inst));
    } else if (a.problem == "vc" && algo == "path") {
      take_branch(fpt::vc_path_branch(inst));
    } else if (a.problem == "vc" && algo == "degree") {
      take_branch(fpt::vc_degree_branch(inst));
    } else if (a.problem == "vc" && algo == "compression") {
      const auto r = fpt::vc_by_compression(inst);
      yes = r.yes;
      if (r.witness) rec["witness"] = one_based(*r.witness);
      rec["nodes_expanded"] = r.stats.subsets_examined;
    } else if (a.problem == "vc" && algo == "kernel+degree") {
      const auto kern = fpt::nt_kernel_vc(inst);
      if (const auto* d = std::get_if<fpt::decided>(&kern)) {
        yes = d->answer;
        rec["nodes_expanded"] = 0;
      } else {
        const auto& red = std::get<fpt::reduced_graph>(kern);
        const auto r = fpt::vc_degree_branch(red.instance);
        yes = r.yes;
        if (r.witness) rec["witness"] = one_based(red.lift(*r.witness));
        rec["nodes_expanded"] = r.stats.nodes_expanded;
      }
    } else if (algo == "decomp-dp") {
      std::optional<fpt::branch_decomposition> bd;
      if (!a.bd_path.empty()) {
        bd = fpt::parse_decomposition(read_file(a.bd_path), g);
      } else if (g.edge_count() > 0) {
        bd = fpt::heuristic_decomposition(g);
      }
      if (a.problem == "vc") {
        if (!bd) {
          yes = k >= 0;
          if (yes) rec["witness"] = json::array();
        } else {
          const auto r = fpt::bw_vertex_cover(g, *bd, k);
          yes = r.yes;
          if (r.witness) rec["witness"] = one_based(*r.witness);
        }
      } else {
        if (!bd) {
          yes = true;
          rec["witness"] = std::vector<int>(g.vertex_count(), 1);
        } else {
          const auto r = fpt::bw_three_coloring(g, *bd);
          yes = r.yes;
          if (r.coloring) rec["witness"] = *r.coloring;
        }
      }
    } else if (a.problem == "ds") {
      take_branch(fpt::ds_degree_branch(inst, a.d.value_or(g.max_degree())));
    } else if (a.problem == "kpath") {
      if (!(a.delta > 0.0 && a.delta < 1.0)) throw usage_error("--delta must lie in (0, 1)");
      const auto r = fpt::k_path_randomized(g, k, a.delta, a.seed);
      yes = r.yes;
      if (r.witness) rec["witness"] = one_based(*r.witness);
      rec["trials"] = r.trials_run;
      rec["seed"] = r.seed;
    } else if (a.problem == "tripack") {
      const auto r = fpt::triangle_packing_decide(inst);
      yes = r.yes;
      if (r.witness) {
        json w = json::array();
        for (const auto& t : *r.witness) w.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
        rec["witness"] = w;
      }
      rec["nodes_expanded"] = r.stats.branch_nodes;
    } else if (a.problem == "maxleaf") {
      const auto kern = fpt::maxleaf_kernel(inst);
      if (const auto* d = std::get_if<fpt::decided>(&kern)) {
        yes = d->answer;
      } else {
        const auto& red = std::get<fpt::reduced_graph>(kern);
        yes = fpt::oracle::max_leaf(red.instance.g, kernel_solve_cap) >= red.instance.k;
      }
    } else if (a.problem == "nonblocker") {
      const auto kern = fpt::nonblocker_kernel(inst);
      if (const auto* d = std::get_if<fpt::decided>(&kern)) {
        yes = d->answer;
      } else {
        const auto& red = std::get<fpt::reduced_graph>(kern);
        yes = fpt::oracle::max_nonblocker(red.instance.g, kernel_solve_cap) >= red.instance.k;
      }
    }
  }
  rec["answer"] = answer(yes);
  rec["wall_ms"] = ms_since(t0);
  std::cout << rec.dump() << '\n';
  return yes ? exit_yes : exit_no;
}

// ------------------------------------------------------------------- kernelize

struct kernelize_args {
  std::string problem;
  std::string input;
  int k = 0;
  std::string out;
};

int run_kernelize(const kernelize_args& a) {
  json rec;
  rec["schema_version"] = fpt::bench::schema_version;
  rec["problem"] = a.problem;
  rec["k"] = a.k;
  rec["original_size"] = nullptr;
  rec["outcome"] = nullptr;
  rec["answer"] = nullptr;
  rec["reduced_size"] = nullptr;
  rec["reduced_k"] = nullptr;
  rec["bound"] = nullptr;
  rec["bound_met"] = nullptr;
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<std::string> reduced_text;

  if (a.problem == "3dm") {
    const auto ts = fpt::parse_triples(read_file(a.input));
    rec["original_size"] = ts.triples.size();
    const auto kern = fpt::threedm_kernel(ts, a.k);
    if (const auto* d = std::get_if<fpt::decided>(&kern)) {
      rec["outcome"] = "decided";
      rec["answer"] = answer(d->answer);
    } else {
      const auto& red = std::get<fpt::reduced_triples>(kern);
      const auto size = static_cast<long long>(red.system.triples.size());
      rec["outcome"] = "reduced";
      rec["reduced_size"] = size;
      rec["reduced_k"] = red.k;
      rec["bound"] = fpt::threedm_bound(a.k);
      rec["bound_met"] = size <= fpt::threedm_bound(a.k);
      reduced_text = fpt::serialize_triples(red.system);
    }
  } else {
    const graph g = fpt::parse_graph(read_file(a.input));
    rec["original_size"] = g.vertex_count();
    const fpt::problem_instance inst{g, a.k};
    fpt::graph_kernel kern;
    bool strict = false;
    if (a.problem == "vc") {
      kern = fpt::nt_kernel_vc(inst);
    } else if (a.problem == "nonblocker") {
      kern = fpt::nonblocker_kernel(inst);
    } else if (a.problem == "maxleaf") {
      kern = fpt::maxleaf_kernel(inst);
      strict = true;
    } else {
      throw usage_error("no kernelizer for problem: " + a.problem);
    }
    if (const auto* d = std::get_if<fpt::decided>(&kern)) {
      rec["outcome"] = "decided";
      rec["answer"] = answer(d->answer);
    } else {
      const auto& red = std::get<fpt::reduced_graph>(kern);
      const long long size = red.instance.g.vertex_count();
      long long bound = 0;
      if (a.problem == "vc") bound = fpt::nt_bound(a.k);
      if (a.problem == "nonblocker") bound = fpt::nonblocker_bound(a.k);
      if (a.problem == "maxleaf") bound = fpt::maxleaf_bound(red.instance.k);
      rec["outcome"] = "reduced";
      rec["reduced_size"] = size;
      rec["reduced_k"] = red.instance.k;
      rec["bound"] = bound;
      rec["bound_met"] = strict ? size < bound : size <= bound;
      reduced_text = fpt::serialize_graph(red.instance.g);
    }
  }
  if (!a.out.empty()) {
    // A decided instance has nothing to write; leave any old file untouched.
    if (reduced_text) write_file(a.out, *reduced_text);
  }
  rec["wall_ms"] = ms_since(t0);
  std::cout << rec.dump() << '\n';
  return 0;
}

// -------------------------------------------------------------------- generate

struct generate_args {
  std::string kind;
  int n = 0;
  std::int64_t m = 0;
  int k = 0;
  int rows = 0;
  int cols = 0;
  int a = 0, b = 0, c = 0, draws = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const generate_args& a) {
  std::string text;
  if (a.kind == "path") text = fpt::serialize_graph(fpt::gen::path(a.n));
  else if (a.kind == "cycle") text = fpt::serialize_graph(fpt::gen::cycle(a.n));
  else if (a.kind == "star") text = fpt::serialize_graph(fpt::gen::star(a.n));
  else if (a.kind == "complete") text = fpt::serialize_graph(fpt::gen::complete(a.n));
  else if (a.kind == "grid") text = fpt::serialize_graph(fpt::gen::grid(a.rows, a.cols));
  else if (a.kind == "random") text = fpt::serialize_graph(fpt::gen::random(a.n, a.m, a.seed));
  else if (a.kind == "random_connected") text = fpt::serialize_graph(fpt::gen::random_connected(a.n, a.m, a.seed));
  else if (a.kind == "planted_path") text = fpt::serialize_graph(fpt::gen::planted_path(a.n, a.m, a.k, a.seed));
  else if (a.kind == "triples") text = fpt::serialize_triples(fpt::gen::random_triples(a.a, a.b, a.c, a.draws, a.seed));
  else throw usage_error("unknown generator: " + a.kind);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_file(a.out, text);
  }
  return 0;
}

// ----------------------------------------------------------------------- bench

int run_bench(const std::string& suite, std::uint64_t seed, const std::string& out) {
  if (!fpt::bench::is_suite(suite)) throw usage_error("unknown bench suite: " + suite);
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw usage_error("cannot write " + out);
  }
  const auto text = fpt::bench::to_lines(fpt::bench::run_suite(suite, seed));
  if (out.empty()) {
    std::cout << text;
  } else {
    file << text;
    if (!file.flush()) throw usage_error("cannot write " + out);
  }
  return 0;
}

// ---------------------------------------------------------------------- oracle

int run_oracle(const std::string& problem, const std::string& input) {
  json rec;
  rec["schema_version"] = fpt::bench::schema_version;
  rec["problem"] = problem;
  if (problem == "3dm") {
    const auto ts = fpt::parse_triples(read_file(input));
    rec["n"] = ts.size_a + ts.size_b + ts.size_c;
    rec["m"] = ts.triples.size();
    rec["value"] = fpt::oracle::max_3dm(ts);
  } else {
    const graph g = fpt::parse_graph(read_file(input));
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    if (problem == "vc") rec["value"] = fpt::oracle::vc_opt(g).size;
    else if (problem == "ds") rec["value"] = fpt::oracle::dominating_opt(g);
    else if (problem == "kpath") rec["value"] = fpt::oracle::longest_path_vertices(g);
    else if (problem == "3col") rec["value"] = fpt::oracle::is_3_colorable(g);
    else if (problem == "maxleaf") rec["value"] = fpt::oracle::max_leaf(g);
    else if (problem == "tripack") rec["value"] = fpt::oracle::max_triangle_packing(g);
    else if (problem == "nonblocker") rec["value"] = fpt::oracle::max_nonblocker(g);
    else throw usage_error("unknown problem: " + problem);
  }
  std::cout << rec.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fptkit: parameterized algorithms toolkit"};
  app.require_subcommand(1);

  solve_args sa;
  auto* solve = app.add_subcommand("solve", "decide a parameterized instance");
  solve->add_option("problem", sa.problem, "vc|ds|kpath|3col|maxleaf|tripack|3dm|nonblocker")->required();
  solve->add_option("input", sa.input, "instance file")->required();
  solve->add_option("--algorithm,-a", sa.algorithm, "solver (default: first listed for the problem)");
  solve->add_option("--k,-k", sa.k, "parameter");
  solve->add_option("--bd", sa.bd_path, "branch decomposition file for decomp-dp");
  solve->add_option("--d", sa.d, "degree bound for ds (default: max degree)");
  solve->add_option("--delta", sa.delta, "failure probability for colorcode")->capture_default_str();
  solve->add_option("--seed", sa.seed, "random seed")->capture_default_str();

  kernelize_args ka;
  auto* kernelize = app.add_subcommand("kernelize", "reduce an instance to a kernel");
  kernelize->add_option("problem", ka.problem, "vc|nonblocker|maxleaf|3dm")->required();
  kernelize->add_option("input", ka.input, "instance file")->required();
  kernelize->add_option("--k,-k", ka.k, "parameter")->required();
  kernelize->add_option("--out,-o", ka.out, "write the reduced instance here");

  generate_args ga;
  auto* generate = app.add_subcommand("generate", "write a generated instance");
  generate->add_option("kind", ga.kind, "path|cycle|star|complete|grid|random|random_connected|planted_path|triples")
      ->required();
  generate->add_option("--n", ga.n, "vertices (leaves for star)");
  generate->add_option("--m", ga.m, "edges");
  generate->add_option("--k", ga.k, "planted path length");
  generate->add_option("--rows", ga.rows);
  generate->add_option("--cols", ga.cols);
  generate->add_option("--a", ga.a, "|A| for triples");
  generate->add_option("--b", ga.b, "|B| for triples");
  generate->add_option("--c", ga.c, "|C| for triples");
  generate->add_option("--draws", ga.draws, "triples drawn");
  generate->add_option("--seed", ga.seed)->capture_default_str();
  generate->add_option("--out,-o", ga.out);

  std::string suite, bench_out;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite, one JSON record per line");
  bench->add_option("suite", suite, "vc-branching|kernel-sizes|colorcode-stats|dp-vs-oracle")->required();
  bench->add_option("--seed", bench_seed)->capture_default_str();
  bench->add_option("--out,-o", bench_out);

  std::string oracle_problem, oracle_input;
  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum for small instances");
  oracle->add_option("problem", oracle_problem)->required();
  oracle->add_option("input", oracle_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*solve) return run_solve(sa);
    if (*kernelize) return run_kernelize(ka);
    if (*generate) return run_generate(ga);
    if (*bench) return run_bench(suite, bench_seed, bench_out);
    if (*oracle) return run_oracle(oracle_problem, oracle_input);
  } catch (const fpt::parse_error& e) {
    std::cerr << "fptkit: format error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "fptkit: " << e.what() << '\n';
  }
  return exit_usage;
}
