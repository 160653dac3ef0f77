#include "fpt/generators.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fpt/errors.hpp"
#include "fpt/rng.hpp"

namespace fpt::gen {

namespace {

void require_non_negative(long long x, const char* what) {
  if (x < 0) throw parameter_error(std::string(what) + " must be non-negative");
}

std::int64_t max_edges(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

edge ordered(vertex a, vertex b) { return a < b ? edge{a, b} : edge{b, a}; }

// Adds uniformly chosen non-edges to `have` until it holds m edges.
void fill_random(int n, std::int64_t m, splitmix64& rng, std::set<edge>& have) {
  const std::int64_t total = max_edges(n);
  const auto missing = m - static_cast<std::int64_t>(have.size());
  if (missing <= 0) return;
  if (total <= 4'000'000 && missing * 3 > total - static_cast<std::int64_t>(have.size())) {
    // Dense request: shuffle the complement.
    std::vector<edge> pool;
    for (vertex u = 0; u < n; ++u) {
      for (vertex v = u + 1; v < n; ++v) {
        if (!have.count({u, v})) pool.push_back({u, v});
      }
    }
    rng.shuffle(pool);
    for (std::int64_t i = 0; i < missing; ++i) have.insert(pool[static_cast<std::size_t>(i)]);
    return;
  }
  while (static_cast<std::int64_t>(have.size()) < m) {
    auto u = static_cast<vertex>(rng.below(static_cast<std::uint64_t>(n)));
    auto v = static_cast<vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (u != v) have.insert(ordered(u, v));
  }
}

graph build(int n, const std::set<edge>& es) {
  std::vector<edge> list(es.begin(), es.end());
  return graph::from_edges(n, list);
}

}  // namespace

graph path(int n) {
  require_non_negative(n, "n");
  std::vector<edge> es;
  for (vertex v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return graph::from_edges(n, es);
}

graph cycle(int n) {
  require_non_negative(n, "n");
  std::vector<edge> es;
  for (vertex v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  if (n >= 3) es.push_back({0, n - 1});
  return graph::from_edges(n, es);
}

graph star(int leaves) {
  require_non_negative(leaves, "leaves");
  std::vector<edge> es;
  for (vertex v = 1; v <= leaves; ++v) es.push_back({0, v});
  return graph::from_edges(leaves + 1, es);
}

graph complete(int n) {
  require_non_negative(n, "n");
  std::vector<edge> es;
  for (vertex u = 0; u < n; ++u) {
    for (vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  }
  return graph::from_edges(n, es);
}

graph grid(int rows, int cols) {
  require_non_negative(rows, "rows");
  require_non_negative(cols, "cols");
  std::vector<edge> es;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      vertex v = r * cols + c;
      if (c + 1 < cols) es.push_back({v, v + 1});
      if (r + 1 < rows) es.push_back({v, v + cols});
    }
  }
  return graph::from_edges(rows * cols, es);
}

graph random(int n, std::int64_t m, std::uint64_t seed) {
  require_non_negative(n, "n");
  require_non_negative(m, "m");
  if (m > max_edges(n)) throw parameter_error("m exceeds n(n-1)/2");
  splitmix64 rng(seed);
  std::set<edge> es;
  fill_random(n, m, rng, es);
  return build(n, es);
}

graph planted_path(int n, std::int64_t m, int k, std::uint64_t seed) {
  require_non_negative(n, "n");
  require_non_negative(m, "m");
  require_non_negative(k, "k");
  if (k > n) throw parameter_error("planted path longer than n");
  if (m > max_edges(n)) throw parameter_error("m exceeds n(n-1)/2");
  if (k >= 1 && m < k - 1) throw parameter_error("m smaller than the planted path's k-1 edges");
  splitmix64 rng(seed);
  std::vector<vertex> perm(n);
  for (vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);
  std::set<edge> es;
  for (int i = 0; i + 1 < k; ++i) es.insert(ordered(perm[i], perm[i + 1]));
  fill_random(n, m, rng, es);
  return build(n, es);
}

graph random_connected(int n, std::int64_t m, std::uint64_t seed) {
  require_non_negative(n, "n");
  if (n > 0 && m < n - 1) throw parameter_error("connected graph needs m >= n-1");
  if (m > max_edges(n)) throw parameter_error("m exceeds n(n-1)/2");
  splitmix64 rng(seed);
  std::vector<vertex> perm(n);
  for (vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);
  std::set<edge> es;
  for (int i = 1; i < n; ++i) {
    auto parent = perm[rng.below(static_cast<std::uint64_t>(i))];
    es.insert(ordered(perm[i], parent));
  }
  fill_random(n, m, rng, es);
  return build(n, es);
}

graph disjoint_union(const graph& a, const graph& b) {
  auto es = a.edges();
  const int shift = a.vertex_count();
  for (auto e : b.edges()) es.push_back({e.u + shift, e.v + shift});
  return graph::from_edges(a.vertex_count() + b.vertex_count(), es);
}

triple_system random_triples(int size_a, int size_b, int size_c, int draws, std::uint64_t seed) {
  require_non_negative(draws, "draws");
  if (draws > 0 && (size_a <= 0 || size_b <= 0 || size_c <= 0)) {
    throw parameter_error("random_triples: empty class with draws > 0");
  }
  splitmix64 rng(seed);
  std::vector<triple> ts;
  for (int i = 0; i < draws; ++i) {
    const auto a = static_cast<int>(rng.below(size_a));
    const auto b = static_cast<int>(rng.below(size_b));
    const auto c = static_cast<int>(rng.below(size_c));
    ts.push_back({a, b, c});
  }
  return triple_system::make(size_a, size_b, size_c, std::move(ts));
}

}  // namespace fpt::gen
