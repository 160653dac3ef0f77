#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fpt/compression.hpp"
#include "fpt/errors.hpp"
#include "fpt/generators.hpp"
#include "fpt/oracle.hpp"
#include "fpt/rng.hpp"
#include "fpt/search_tree.hpp"
#include "support.hpp"

using namespace fpt;

TEST_CASE("solve_vdd examples") {
  const auto plugin = edgeless_plugin();
  for (int k = 0; k <= 3; ++k) {
    const auto r = solve_vdd(graph(0), k, plugin);
    CHECK(r.yes);
    REQUIRE(r.witness);
    CHECK(r.witness->empty());
  }
  CHECK_FALSE(solve_vdd(gen::complete(2), 0, plugin).yes);
  CHECK(brute::vertex_cover(gen::complete(3)) == 2);
  const auto k3 = solve_vdd(gen::complete(3), 2, plugin);
  CHECK(k3.yes);
  REQUIRE(k3.witness);
  CHECK(k3.witness->size() == 2);
  CHECK(oracle::deletion_leaves_edgeless(gen::complete(3), *k3.witness));
  CHECK_FALSE(solve_vdd(gen::complete(2), -1, plugin).yes);
}

TEST_CASE("edgeless plugin annotated solver") {
  const auto plugin = edgeless_plugin();
  const graph k2 = gen::complete(2);
  const std::vector<vertex> both{0, 1};
  CHECK_FALSE(plugin.annotated(k2, both, 1).has_value());
  const auto two = plugin.annotated(k2, both, 2);
  REQUIRE(two);
  CHECK(two->size() == 2);
  // H[Q] is not edgeless here, so the input breaks the promise.
  CHECK_THROWS_AS(check_annotated_promises(plugin, k2, both), contract_error);

  // Path end1 - middle - end2 with Q = the ends.
  const graph p3 = gen::path(3);
  const std::vector<vertex> ends{0, 2};
  CHECK_NOTHROW(check_annotated_promises(plugin, p3, ends));
  const auto r = plugin.annotated(p3, ends, 2);
  REQUIRE(r);
  CHECK(*r == ends);
  CHECK_FALSE(plugin.annotated(p3, ends, 1).has_value());

  const graph empty(4);
  const std::vector<vertex> some{1, 3};
  const auto none = plugin.annotated(empty, some, 0);
  REQUIRE(none);
  CHECK(none->empty());
}

TEST_CASE("vertex cover by compression examples") {
  CHECK_FALSE(vc_by_compression({gen::complete(3), 1}).yes);
  CHECK(vc_by_compression({gen::path(4), 2}).yes);
  CHECK(vc_by_compression({graph(6), 0}).yes);
}

TEST_CASE("compression agrees with enumeration and with branching") {
  compression_options checked;
  checked.check_invariants = true;
  for (std::uint64_t s = 0; s < 120; ++s) {
    const int n = 1 + static_cast<int>(s % 11);
    const std::int64_t m = static_cast<std::int64_t>((s * 13) % (std::min(n * (n - 1) / 2, 24) + 1));
    const graph g = gen::random(n, m, s);
    const int vc = brute::vertex_cover(g);
    for (int k = 0; k <= n; ++k) {
      CAPTURE(s);
      CAPTURE(k);
      const auto r = vc_by_compression({g, k}, checked);
      CHECK(r.yes == (vc <= k));
      CHECK(r.yes == vc_edge_branch({g, k}).yes);
      if (r.witness) {
        CHECK(static_cast<int>(r.witness->size()) <= k);
        CHECK(oracle::is_vertex_cover(g, *r.witness));
      }
      CHECK(r.stats.insertions <= static_cast<std::uint64_t>(n));
      CHECK(static_cast<double>(r.stats.max_subsets_per_step) <= std::ldexp(1.0, k + 1));
    }
  }
}

TEST_CASE("hereditary property check by sampling") {
  // Edgeless graphs are closed under induced subgraphs.
  const auto plugin = edgeless_plugin();
  splitmix64 rng(5);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const graph g = gen::random(10, 0, s);
    REQUIRE(plugin.member(g));
    std::vector<vertex> keep;
    for (vertex v = 0; v < 10; ++v) {
      if (rng.below(2)) keep.push_back(v);
    }
    CHECK(plugin.member(induced_subgraph(g, keep).g));
  }
}

TEST_CASE("misbehaving plugins are caught") {
  auto liar = edgeless_plugin();
  liar.annotated = [](const graph& h, std::span<const vertex>, int) -> std::optional<std::vector<vertex>> {
    // Returns a vertex outside Q when H has one.
    std::vector<vertex> r;
    if (h.vertex_count() > 0) r.push_back(0);
    return r;
  };
  CHECK_THROWS_AS(solve_vdd(gen::complete(4), 2, liar), contract_error);

  auto greedy = edgeless_plugin();
  greedy.annotated = [](const graph&, std::span<const vertex> q, int) -> std::optional<std::vector<vertex>> {
    return std::vector<vertex>(q.begin(), q.end());
  };
  CHECK_THROWS_AS(solve_vdd(gen::complete(5), 3, greedy), contract_error);

  auto lazy = edgeless_plugin();
  lazy.annotated = [](const graph&, std::span<const vertex>, int) -> std::optional<std::vector<vertex>> {
    return std::vector<vertex>{};
  };
  // Q is empty on K4 at k=3, so only a graph with edges into Q exposes it.
  CHECK_NOTHROW(solve_vdd(gen::complete(4), 3, lazy));
  CHECK_THROWS_AS(solve_vdd(gen::star(3), 1, lazy), contract_error);
}
