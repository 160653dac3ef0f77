#include "fpt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "fpt/color_coding.hpp"
#include "fpt/compression.hpp"
#include "fpt/decomposition.hpp"
#include "fpt/errors.hpp"
#include "fpt/generators.hpp"
#include "fpt/kernel.hpp"
#include "fpt/oracle.hpp"
#include "fpt/rng.hpp"
#include "fpt/search_tree.hpp"

namespace fpt::bench {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

record header(const std::string& suite, const std::string& instance, std::uint64_t seed) {
  record r;
  r["schema_version"] = schema_version;
  r["suite"] = suite;
  r["instance"] = instance;
  r["seed"] = seed;
  return r;
}

std::string answer(bool yes) { return yes ? "YES" : "NO"; }

int draw(splitmix64& rng, int lo, int hi) { return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))); }

std::int64_t max_edges(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

// ---------------------------------------------------------------- vc-branching

std::vector<record> vc_branching(std::uint64_t seed) {
  std::vector<record> out;
  const splitmix64 root(seed);
  for (int k = 4; k <= 12; ++k) {
    for (int i = 0; i < 5; ++i) {
      auto rng = root.split(static_cast<std::uint64_t>(k * 100 + i));
      // Alternate tight NO (vc = k+1) and tight YES (vc = k) instances.
      const int target = i % 2 == 0 ? k + 1 : k;
      const int n = std::min(20, k + 8);
      graph g(0);
      std::uint64_t gseed = 0;
      for (;;) {
        const auto m = static_cast<std::int64_t>(draw(rng, n, static_cast<int>(max_edges(n))));
        gseed = rng.next();
        g = gen::random(n, m, gseed);
        if (oracle::vc_opt(g).size == target) break;
      }
      const problem_instance inst{g, k};
      const bool truth = target <= k;
      const std::string name = "vc-k" + std::to_string(k) + "-" + std::to_string(i);

      auto emit = [&](const std::string& algo, bool yes, bool witness_ok, std::uint64_t nodes, const nlohmann::json& bound,
                      double ms) {
        auto r = header("vc-branching", name, gseed);
        r["algorithm"] = algo;
        r["n"] = n;
        r["m"] = g.edge_count();
        r["k"] = k;
        r["answer"] = answer(yes);
        r["oracle_answer"] = answer(truth);
        r["witness_valid"] = witness_ok;
        r["nodes_expanded"] = nodes;
        r["bound"] = bound;
        r["within_bound"] = bound.is_null() ? nlohmann::json(nullptr) : nlohmann::json(static_cast<double>(nodes) <= bound.get<double>());
        r["wall_ms"] = ms;
        out.push_back(std::move(r));
      };
      auto check = [&](const std::optional<std::vector<vertex>>& w) { return !w || oracle::is_vertex_cover(g, *w); };

      auto t0 = clock_type::now();
      auto e = vc_edge_branch(inst);
      emit("edge", e.yes, check(e.witness), e.stats.nodes_expanded, std::ldexp(1.0, k + 1), ms_since(t0));
      t0 = clock_type::now();
      auto p = vc_path_branch(inst);
      emit("path", p.yes, check(p.witness), p.stats.nodes_expanded, nullptr, ms_since(t0));
      t0 = clock_type::now();
      auto d = vc_degree_branch(inst);
      emit("degree", d.yes, check(d.witness), d.stats.nodes_expanded, 8.0 * std::pow(1.4656, k), ms_since(t0));
      t0 = clock_type::now();
      auto c = vc_by_compression(inst);
      emit("compression", c.yes, check(c.witness), c.stats.subsets_examined, nullptr, ms_since(t0));
    }
  }
  return out;
}

// ---------------------------------------------------------------- kernel-sizes

record kernel_record(const std::string& kernel, const std::string& name, std::uint64_t gseed) {
  auto r = header("kernel-sizes", name, gseed);
  r["algorithm"] = kernel;
  return r;
}

void finish_graph_kernel(record& r, const graph& g, int k, const graph_kernel& out, long long bound, bool strict,
                         double ms) {
  r["n"] = g.vertex_count();
  r["m"] = g.edge_count();
  r["k"] = k;
  if (const auto* d = std::get_if<decided>(&out)) {
    r["outcome"] = "decided";
    r["answer"] = answer(d->answer);
    r["reduced_k"] = nullptr;
    r["reduced_size"] = nullptr;
    r["bound"] = nullptr;
    r["bound_met"] = true;
  } else {
    const auto& red = std::get<reduced_graph>(out);
    const int size = red.instance.g.vertex_count();
    r["outcome"] = "reduced";
    r["answer"] = nullptr;
    r["reduced_k"] = red.instance.k;
    r["reduced_size"] = size;
    r["bound"] = bound;
    r["bound_met"] = strict ? size < bound : size <= bound;
  }
  r["wall_ms"] = ms;
}

std::vector<record> kernel_sizes(std::uint64_t seed) {
  std::vector<record> out;
  const splitmix64 root(seed);
  for (int i = 0; i < 100; ++i) {
    auto rng = root.split(static_cast<std::uint64_t>(i));
    const int n = draw(rng, 2, 16);
    const auto m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(std::min<std::int64_t>(max_edges(n), 3 * n) + 1)));
    const int k = draw(rng, 0, n);
    const auto gseed = rng.next();
    const graph g = gen::random(n, m, gseed);
    auto r = kernel_record("nt", "nt-" + std::to_string(i), gseed);
    const auto t0 = clock_type::now();
    const auto res = nt_kernel_vc({g, k});
    finish_graph_kernel(r, g, k, res, nt_bound(k), false, ms_since(t0));
    out.push_back(std::move(r));
  }
  for (int i = 0; i < 100; ++i) {
    auto rng = root.split(static_cast<std::uint64_t>(1000 + i));
    const int n = draw(rng, 1, 16);
    const auto m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(std::min<std::int64_t>(max_edges(n), 2 * n) + 1)));
    const int k = draw(rng, 0, n);
    const auto gseed = rng.next();
    const graph g = gen::random(n, m, gseed);
    auto r = kernel_record("nonblocker", "nonblocker-" + std::to_string(i), gseed);
    const auto t0 = clock_type::now();
    const auto res = nonblocker_kernel({g, k});
    finish_graph_kernel(r, g, k, res, nonblocker_bound(k), false, ms_since(t0));
    out.push_back(std::move(r));
  }
  for (int i = 0; i < 100; ++i) {
    auto rng = root.split(static_cast<std::uint64_t>(2000 + i));
    const int n = draw(rng, 2, 40);
    const std::int64_t extra = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n / 2 + 1)));
    const std::int64_t m = std::min<std::int64_t>(max_edges(n), n - 1 + extra);
    const int k = draw(rng, 1, 8);
    const auto gseed = rng.next();
    const graph g = gen::random_connected(n, m, gseed);
    auto r = kernel_record("maxleaf", "maxleaf-" + std::to_string(i), gseed);
    const auto t0 = clock_type::now();
    const auto res = maxleaf_kernel({g, k});
    long long bound = 0;
    if (const auto* red = std::get_if<reduced_graph>(&res)) bound = maxleaf_bound(red->instance.k);
    finish_graph_kernel(r, g, k, res, bound, true, ms_since(t0));
    out.push_back(std::move(r));
  }
  for (int i = 0; i < 100; ++i) {
    auto rng = root.split(static_cast<std::uint64_t>(3000 + i));
    const int sa = draw(rng, 1, 4);
    const int sb = draw(rng, 2, 8);
    const int sc = draw(rng, 2, 8);
    const int draws = draw(rng, 10, 200);
    const int k = draw(rng, 1, 5);
    const auto tseed = rng.next();
    const auto ts = gen::random_triples(sa, sb, sc, draws, tseed);
    auto r = header("kernel-sizes", "3dm-" + std::to_string(i), tseed);
    r["algorithm"] = "3dm";
    r["n"] = static_cast<int>(ts.triples.size());
    r["m"] = nullptr;
    r["k"] = k;
    const auto t0 = clock_type::now();
    const auto res = threedm_kernel(ts, k);
    if (const auto* d = std::get_if<decided>(&res)) {
      r["outcome"] = "decided";
      r["answer"] = answer(d->answer);
      r["reduced_k"] = nullptr;
      r["reduced_size"] = nullptr;
      r["bound"] = nullptr;
      r["bound_met"] = true;
    } else {
      const auto& red = std::get<reduced_triples>(res);
      const auto size = static_cast<long long>(red.system.triples.size());
      r["outcome"] = "reduced";
      r["answer"] = nullptr;
      r["reduced_k"] = red.k;
      r["reduced_size"] = size;
      r["bound"] = threedm_bound(k);
      r["bound_met"] = size <= threedm_bound(k);
    }
    r["wall_ms"] = ms_since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------- colorcode-stats

std::vector<record> colorcode_stats(std::uint64_t seed) {
  std::vector<record> out;
  const splitmix64 root(seed);
  constexpr double delta = 0.01;
  auto emit = [&](const std::string& name, const std::string& kind, std::uint64_t gseed, const graph& g, int k,
                  bool expected, std::uint64_t run_seed) {
    const auto t0 = clock_type::now();
    const auto res = k_path_randomized(g, k, delta, run_seed);
    const double ms = ms_since(t0);
    auto r = header("colorcode-stats", name, gseed);
    r["algorithm"] = "colorcode";
    r["kind"] = kind;
    r["n"] = g.vertex_count();
    r["m"] = g.edge_count();
    r["k"] = k;
    r["delta"] = delta;
    r["expected"] = answer(expected);
    r["answer"] = answer(res.yes);
    r["witness_valid"] = !res.witness || (static_cast<int>(res.witness->size()) == k && oracle::is_simple_path(g, *res.witness));
    r["trials_planned"] = res.trials_planned;
    r["trials_run"] = res.trials_run;
    r["run_seed"] = res.seed;
    r["wall_ms"] = ms;
    out.push_back(std::move(r));
  };
  for (int i = 0; i < 100; ++i) {
    auto rng = root.split(static_cast<std::uint64_t>(i));
    const int k = draw(rng, 2, 6);
    const int n = draw(rng, std::max(k, 8), 40);
    const std::int64_t m = std::min<std::int64_t>(max_edges(n), draw(rng, k - 1, 2 * n));
    const auto gseed = rng.next();
    const graph g = gen::planted_path(n, m, k, gseed);
    emit("planted-" + std::to_string(i), "planted", gseed, g, k, true, rng.next());
  }
  // Sparse graphs asked for a path one vertex longer than their longest.
  for (int i = 0; i < 30; ++i) {
    auto rng = root.split(static_cast<std::uint64_t>(1000 + i));
    const int n = draw(rng, 4, 14);
    const std::int64_t m = std::min<std::int64_t>(max_edges(n), draw(rng, 0, n * 3 / 4));
    const auto gseed = rng.next();
    const graph g = gen::random(n, m, gseed);
    const int longest = oracle::longest_path_vertices(g);
    if (longest >= 6) continue;
    emit("negative-" + std::to_string(i), "negative", gseed, g, longest + 1, false, rng.next());
  }
  return out;
}

// ---------------------------------------------------------------- dp-vs-oracle

std::vector<record> dp_vs_oracle(std::uint64_t seed) {
  std::vector<record> out;
  const splitmix64 root(seed);
  auto run = [&](const std::string& name, std::uint64_t gseed, const graph& g, const std::string& decomp_kind,
                 const branch_decomposition& bd, int vc_truth, bool col_truth) {
    auto base = [&](const std::string& algo) {
      auto r = header("dp-vs-oracle", name, gseed);
      r["algorithm"] = algo;
      r["decomposition"] = decomp_kind;
      r["n"] = g.vertex_count();
      r["m"] = g.edge_count();
      r["width"] = width(bd);
      return r;
    };
    auto t0 = clock_type::now();
    const auto vc = bw_vertex_cover(g, bd, g.vertex_count());
    auto r = base("vc-dp");
    r["value"] = vc.min_cover;
    r["oracle_value"] = vc_truth;
    r["agrees"] = vc.min_cover == vc_truth;
    r["witness_valid"] = vc.witness && oracle::is_vertex_cover(g, *vc.witness) &&
                         static_cast<int>(vc.witness->size()) == vc.min_cover;
    r["wall_ms"] = ms_since(t0);
    out.push_back(std::move(r));

    t0 = clock_type::now();
    const auto col = bw_three_coloring(g, bd);
    r = base("3col-dp");
    r["value"] = answer(col.yes);
    r["oracle_value"] = answer(col_truth);
    r["agrees"] = col.yes == col_truth;
    r["witness_valid"] = !col.yes || (col.coloring && oracle::is_proper_coloring(g, *col.coloring, 3));
    r["wall_ms"] = ms_since(t0);
    out.push_back(std::move(r));
  };
  for (int i = 0; i < 130; ++i) {
    auto rng = root.split(static_cast<std::uint64_t>(i));
    // The tail of the corpus is kept small enough for exact decompositions.
    const bool small = i >= 100;
    const int n = small ? draw(rng, 2, 8) : draw(rng, 3, 12);
    const std::int64_t cap = small ? std::min<std::int64_t>(max_edges(n), exact_decomposition_max_edges)
                                   : std::min<std::int64_t>(max_edges(n), 22);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap)));
    const auto gseed = rng.next();
    const graph g = gen::random(n, m, gseed);
    const std::string name = "dp-" + std::to_string(i);
    const int vc_truth = oracle::vc_opt(g).size;
    const bool col_truth = oracle::is_3_colorable(g);
    run(name, gseed, g, "heuristic", heuristic_decomposition(g), vc_truth, col_truth);
    if (g.edge_count() <= exact_decomposition_max_edges) {
      run(name, gseed, g, "exact", exact_decomposition_small(g), vc_truth, col_truth);
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"vc-branching", "kernel-sizes", "colorcode-stats", "dp-vs-oracle"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<record> run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "vc-branching") return vc_branching(seed);
  if (suite == "kernel-sizes") return kernel_sizes(seed);
  if (suite == "colorcode-stats") return colorcode_stats(seed);
  if (suite == "dp-vs-oracle") return dp_vs_oracle(seed);
  throw parameter_error("unknown bench suite: " + suite);
}

record without_timing(const record& r) {
  record copy = r;
  copy.erase("wall_ms");
  return copy;
}

std::string to_lines(const std::vector<record>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

}  // namespace fpt::bench
