#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpt/errors.hpp"
#include "fpt/generators.hpp"
#include "fpt/kernel.hpp"
#include "fpt/matching.hpp"
#include "fpt/rng.hpp"
#include "fpt/oracle.hpp"
#include "support.hpp"

using namespace fpt;

namespace {

bool contains(const std::vector<vertex>& sorted, vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

// Two degree-3 hubs joined by three paths with `internal` inner vertices each.
graph theta(int internal) {
  std::vector<edge> es;
  int next = 2;
  for (int p = 0; p < 3; ++p) {
    vertex prev = 0;
    for (int i = 0; i < internal; ++i) {
      es.push_back({prev, next});
      prev = next++;
    }
    es.push_back({prev, 1});
  }
  return graph::from_edges(next, es);
}

graph random_graph(std::uint64_t s, int max_n) {
  const int n = 1 + static_cast<int>(s % max_n);
  const std::int64_t m = static_cast<std::int64_t>((s * 11) % (n * (n - 1) / 2 + 1));
  return gen::random(n, m, s);
}

}  // namespace

TEST_CASE("matching and koenig cover") {
  bipartite_graph b;
  b.left = 3;
  b.right = 3;
  b.adj = {{0, 1}, {0}, {1, 2}};
  const auto m = maximum_matching(b);
  CHECK(m.size == 3);
  const auto c = koenig_cover(b, m);
  CHECK(std::count(c.left.begin(), c.left.end(), 1) + std::count(c.right.begin(), c.right.end(), 1) == 3);
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int l = 1 + static_cast<int>(s % 6), r = 1 + static_cast<int>((s / 6) % 6);
    bipartite_graph h;
    h.left = l;
    h.right = r;
    h.adj.assign(l, {});
    splitmix64 rng(s);
    for (int u = 0; u < l; ++u) {
      for (int v = 0; v < r; ++v) {
        if (rng.below(3) == 0) h.adj[u].push_back(v);
      }
    }
    const auto hm = maximum_matching(h);
    const auto hc = koenig_cover(h, hm);
    CHECK(std::count(hc.left.begin(), hc.left.end(), 1) + std::count(hc.right.begin(), hc.right.end(), 1) == hm.size);
    for (int u = 0; u < l; ++u) {
      for (int v : h.adj[u]) CHECK((hc.left[u] || hc.right[v]));
    }
  }
}

TEST_CASE("half-integral partition examples") {
  const auto star = nt_half_integral(gen::star(3));
  CHECK(star.v1 == std::vector<vertex>{0});
  CHECK(star.v0 == std::vector<vertex>{1, 2, 3});
  CHECK(star.half.empty());
  CHECK(brute::doubled_half_lp(gen::star(3)) == 2);

  const auto c4 = nt_half_integral(gen::cycle(4));
  CHECK(c4.half == std::vector<vertex>{0, 1, 2, 3});
  CHECK(brute::doubled_half_lp(gen::cycle(4)) == 4);

  const auto empty = nt_half_integral(graph(4));
  CHECK(empty.v0 == std::vector<vertex>{0, 1, 2, 3});
}

TEST_CASE("half-integral partition properties") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const graph g = random_graph(s, 10);
    const auto p = nt_half_integral(g);
    CAPTURE(s);
    CHECK(p.v0.size() + p.half.size() + p.v1.size() == static_cast<std::size_t>(g.vertex_count()));
    for (auto e : g.edges()) {
      CHECK_FALSE((contains(p.v0, e.u) && contains(p.v0, e.v)));
      CHECK_FALSE((contains(p.v0, e.u) && contains(p.half, e.v)));
      CHECK_FALSE((contains(p.half, e.u) && contains(p.v0, e.v)));
    }
    // LP optimum and lower bound.
    const int doubled = 2 * static_cast<int>(p.v1.size()) + static_cast<int>(p.half.size());
    CHECK(doubled == brute::doubled_half_lp(g));
    CHECK(doubled <= 2 * brute::vertex_cover(g));
    // Superoptimality.
    for (const auto& cover : brute::all_min_covers(g)) {
      for (vertex v : p.v1) CHECK(contains(cover, v));
      for (vertex v : p.v0) CHECK_FALSE(contains(cover, v));
    }
    const auto half = induced_subgraph(g, p.half);
    CHECK(brute::vertex_cover(g) == brute::vertex_cover(half.g) + static_cast<int>(p.v1.size()));
  }
}

TEST_CASE("vertex cover kernel examples") {
  const auto star = nt_kernel_vc({gen::star(3), 1});
  REQUIRE(std::holds_alternative<reduced_graph>(star));
  const auto& rs = std::get<reduced_graph>(star);
  CHECK(rs.instance.g.vertex_count() == 0);
  CHECK(rs.instance.k == 0);
  CHECK(rs.lift(std::vector<vertex>{}) == std::vector<vertex>{0});

  const auto c4 = nt_kernel_vc({gen::cycle(4), 2});
  REQUIRE(std::holds_alternative<reduced_graph>(c4));
  const auto& rc = std::get<reduced_graph>(c4);
  CHECK(rc.instance.g == gen::cycle(4));
  CHECK(rc.instance.k == 2);
  CHECK(rc.instance.g.vertex_count() <= nt_bound(2));

  const auto k2 = nt_kernel_vc({gen::complete(2), 0});
  REQUIRE(is_decided(k2));
  CHECK_FALSE(std::get<decided>(k2).answer);
}

TEST_CASE("vertex cover kernel soundness, bound, lift and idempotence") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const graph g = random_graph(s, 12);
    const int vc = brute::vertex_cover(g);
    for (int k = 0; k <= g.vertex_count(); ++k) {
      CAPTURE(s);
      CAPTURE(k);
      const auto out = nt_kernel_vc({g, k});
      if (const auto* d = std::get_if<decided>(&out)) {
        CHECK(d->answer == (vc <= k));
        continue;
      }
      const auto& red = std::get<reduced_graph>(out);
      CHECK(red.instance.g.vertex_count() <= nt_bound(k));
      CHECK(red.instance.g.vertex_count() <= nt_bound(red.instance.k));
      const int rvc = brute::vertex_cover(red.instance.g);
      CHECK((rvc <= red.instance.k) == (vc <= k));
      if (rvc <= red.instance.k) {
        const auto cover = oracle::vc_opt(red.instance.g).cover;
        const auto lifted = red.lift(cover);
        CHECK(oracle::is_vertex_cover(g, lifted));
        CHECK(static_cast<int>(lifted.size()) <= k);
      }
      const auto again = nt_kernel_vc(red.instance);
      REQUIRE(std::holds_alternative<reduced_graph>(again));
      CHECK(std::get<reduced_graph>(again).instance.g == red.instance.g);
      CHECK(std::get<reduced_graph>(again).instance.k == red.instance.k);
    }
  }
}

TEST_CASE("non-blocker kernel examples") {
  const auto k2 = nonblocker_kernel({gen::complete(2), 1});
  REQUIRE(is_decided(k2));
  CHECK(std::get<decided>(k2).answer);

  const auto iso = nonblocker_kernel({graph(3), 1});
  REQUIRE(is_decided(iso));
  CHECK_FALSE(std::get<decided>(iso).answer);

  CHECK(brute::nonblocker(gen::path(3)) == 2);
  const auto p3 = nonblocker_kernel({gen::path(3), 2});
  REQUIRE(is_decided(p3));
  CHECK(std::get<decided>(p3).answer);
}

TEST_CASE("non-blocker kernel soundness, bound and idempotence") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const graph g = random_graph(s, 12);
    const int opt = brute::nonblocker(g);
    for (int k = 0; k <= g.vertex_count() + 1; ++k) {
      CAPTURE(s);
      CAPTURE(k);
      const auto out = nonblocker_kernel({g, k});
      if (const auto* d = std::get_if<decided>(&out)) {
        CHECK(d->answer == (opt >= k));
        continue;
      }
      const auto& red = std::get<reduced_graph>(out);
      CHECK(red.instance.g.vertex_count() <= nonblocker_bound(k));
      CHECK((brute::nonblocker(red.instance.g) >= red.instance.k) == (opt >= k));
      const auto again = nonblocker_kernel(red.instance);
      REQUIRE(std::holds_alternative<reduced_graph>(again));
      CHECK(std::get<reduced_graph>(again).instance.g == red.instance.g);
      CHECK(std::get<reduced_graph>(again).instance.k == red.instance.k);
    }
  }
}

TEST_CASE("max-leaf kernel examples") {
  const auto star = maxleaf_kernel({gen::star(4), 4});
  if (const auto* d = std::get_if<decided>(&star)) {
    CHECK(d->answer);
  } else {
    const auto& red = std::get<reduced_graph>(star);
    CHECK(brute::max_leaf_spanning(red.instance.g) >= red.instance.k);
  }

  CHECK(brute::max_leaf_spanning(gen::path(5)) == 2);
  const auto p5 = maxleaf_kernel({gen::path(5), 3});
  REQUIRE(std::holds_alternative<reduced_graph>(p5));
  const auto& rp = std::get<reduced_graph>(p5);
  CHECK(brute::max_leaf_spanning(rp.instance.g) < rp.instance.k);

  const graph long_theta = theta(3);
  const graph short_theta = theta(2);
  CHECK(long_theta.vertex_count() == 11);
  maxleaf_counters counters;
  const auto out = maxleaf_kernel({long_theta, 2}, &counters);
  REQUIRE(std::holds_alternative<reduced_graph>(out));
  const auto& rt = std::get<reduced_graph>(out);
  CHECK(counters.r3 == 3);
  CHECK(rt.instance.g.vertex_count() == short_theta.vertex_count());
  CHECK(rt.instance.g.edge_count() == short_theta.edge_count());
  CHECK(brute::max_leaf_spanning(long_theta) == brute::max_leaf_spanning(short_theta));
  CHECK(brute::max_leaf_spanning(rt.instance.g) == brute::max_leaf_spanning(long_theta));

  CHECK_THROWS_AS(maxleaf_kernel({graph(2), 1}), domain_error);
  CHECK_THROWS_AS(maxleaf_kernel({graph(0), 1}), domain_error);
}

TEST_CASE("max-leaf kernel on long cycles") {
  for (int n = 3; n <= 40; ++n) {
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto out = maxleaf_kernel({gen::cycle(n), k});
      if (const auto* d = std::get_if<decided>(&out)) {
        CHECK(d->answer == (2 >= k));
      } else {
        const auto& red = std::get<reduced_graph>(out);
        CHECK(red.instance.g.vertex_count() < maxleaf_bound(red.instance.k));
        CHECK((brute::max_leaf_spanning(red.instance.g) >= red.instance.k) == (2 >= k));
      }
    }
  }
}

TEST_CASE("max-leaf kernel soundness, bound and idempotence") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const int n = 1 + static_cast<int>(s % 12);
    const std::int64_t extra = static_cast<std::int64_t>(s % 4);
    const graph g = gen::random_connected(n, std::min<std::int64_t>(n * (n - 1) / 2, n - 1 + extra), s);
    const int opt = oracle::max_leaf(g);
    for (int k = 0; k <= n; ++k) {
      CAPTURE(s);
      CAPTURE(k);
      const auto out = maxleaf_kernel({g, k});
      if (const auto* d = std::get_if<decided>(&out)) {
        CHECK(d->answer == (opt >= k));
        continue;
      }
      const auto& red = std::get<reduced_graph>(out);
      CHECK(red.instance.g.vertex_count() < maxleaf_bound(red.instance.k));
      CHECK(is_connected(red.instance.g));
      CHECK((oracle::max_leaf(red.instance.g) >= red.instance.k) == (opt >= k));
      const auto again = maxleaf_kernel(red.instance);
      REQUIRE(std::holds_alternative<reduced_graph>(again));
      CHECK(std::get<reduced_graph>(again).instance.g == red.instance.g);
      CHECK(std::get<reduced_graph>(again).instance.k == red.instance.k);
    }
  }
}

TEST_CASE("3dm kernel examples") {
  std::vector<triple> disjoint;
  for (int i = 0; i < 4; ++i) disjoint.push_back({i, i, i});
  const auto yes = threedm_kernel(triple_system::make(4, 4, 4, disjoint), 4);
  REQUIRE(is_decided(yes));
  CHECK(std::get<decided>(yes).answer);

  const int k = 3;
  std::vector<triple> fan;
  for (int i = 0; i < k + 5; ++i) fan.push_back({0, 0, i});
  const auto out = threedm_kernel(triple_system::make(1, 1, k + 5, fan), k);
  REQUIRE(std::holds_alternative<reduced_triples>(out));
  CHECK(std::get<reduced_triples>(out).system.triples.size() == static_cast<std::size_t>(k));

  const auto empty = threedm_kernel(triple_system::make(2, 2, 2, {}), 1);
  REQUIRE(std::holds_alternative<reduced_triples>(empty));
  CHECK(std::get<reduced_triples>(empty).system.triples.empty());

  CHECK(threedm_bound(2) == 15);
  CHECK(threedm_bound(1) == 0);
}

TEST_CASE("3dm kernel soundness, bound and idempotence") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int a = 1 + static_cast<int>(s % 3);
    const auto ts = gen::random_triples(a, 4, 5, 4 + static_cast<int>(s % 17), s);
    const int opt = brute::matching_3d(ts);
    for (int k = 0; k <= 4; ++k) {
      CAPTURE(s);
      CAPTURE(k);
      const auto out = threedm_kernel(ts, k);
      if (const auto* d = std::get_if<decided>(&out)) {
        CHECK(d->answer == (opt >= k));
        continue;
      }
      const auto& red = std::get<reduced_triples>(out);
      CHECK(static_cast<long long>(red.system.triples.size()) <= threedm_bound(k));
      CHECK((brute::matching_3d(red.system) >= red.k) == (opt >= k));
      const auto again = threedm_kernel(red.system, red.k);
      REQUIRE(std::holds_alternative<reduced_triples>(again));
      CHECK(std::get<reduced_triples>(again).system == red.system);
    }
  }
  // Dense systems where the truncation rules do real work.
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto ts = gen::random_triples(2, 6, 6, 60, s);
    for (int k = 2; k <= 4; ++k) {
      const auto out = threedm_kernel(ts, k);
      if (const auto* red = std::get_if<reduced_triples>(&out)) {
        CHECK(static_cast<long long>(red->system.triples.size()) <= threedm_bound(k));
        CHECK((oracle::max_3dm(red->system, 64) >= k) == (oracle::max_3dm(ts, 64) >= k));
      } else {
        CHECK(std::get<decided>(out).answer == (oracle::max_3dm(ts, 64) >= k));
      }
    }
  }
}
