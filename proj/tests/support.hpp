#pragma once

// Naive reference computations for the tests. Everything here is written from
// the problem definitions only and shares no code with the library's solvers
// or with its oracle module.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "fpt/graph.hpp"

namespace brute {

using fpt::graph;
using fpt::vertex;

inline graph make(int n, std::initializer_list<std::pair<int, int>> es) {
  std::vector<fpt::edge> edges;
  for (auto [u, v] : es) edges.push_back({u, v});
  return graph::from_edges(n, edges);
}

inline bool in(std::uint32_t mask, int v) { return (mask >> v) & 1U; }

inline bool covers(const graph& g, std::uint32_t mask) {
  for (auto e : g.edges()) {
    if (!in(mask, e.u) && !in(mask, e.v)) return false;
  }
  return true;
}

inline int vertex_cover(const graph& g) {
  const int n = g.vertex_count();
  int best = n;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (covers(g, s)) best = std::min(best, std::popcount(s));
  }
  return best;
}

inline std::vector<std::vector<vertex>> all_min_covers(const graph& g) {
  const int n = g.vertex_count();
  const int best = vertex_cover(g);
  std::vector<std::vector<vertex>> out;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (std::popcount(s) != best || !covers(g, s)) continue;
    std::vector<vertex> c;
    for (int v = 0; v < n; ++v) {
      if (in(s, v)) c.push_back(v);
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Twice the optimum of the vertex cover LP restricted to values {0, 1/2, 1}.
inline int doubled_half_lp(const graph& g) {
  const int n = g.vertex_count();
  std::vector<int> x(n, 0);
  int best = 2 * n;
  std::function<void(int, int)> go = [&](int i, int value) {
    if (value >= best) return;
    if (i == n) {
      for (auto e : g.edges()) {
        if (x[e.u] + x[e.v] < 2) return;
      }
      best = value;
      return;
    }
    for (int t = 0; t <= 2; ++t) {
      x[i] = t;
      go(i + 1, value + t);
    }
  };
  go(0, 0);
  return best;
}

inline int longest_path(const graph& g) {
  const int n = g.vertex_count();
  int best = n > 0 ? 1 : 0;
  std::vector<char> on(n, 0);
  std::function<void(vertex, int)> walk = [&](vertex v, int len) {
    best = std::max(best, len);
    for (vertex w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      walk(w, len + 1);
      on[w] = 0;
    }
  };
  for (vertex s = 0; s < n; ++s) {
    on[s] = 1;
    walk(s, 1);
    on[s] = 0;
  }
  return best;
}

// Every simple path on exactly k vertices, as vertex sequences.
inline std::vector<std::vector<vertex>> paths_of(const graph& g, int k) {
  std::vector<std::vector<vertex>> out;
  std::vector<vertex> cur;
  std::vector<char> on(g.vertex_count(), 0);
  std::function<void(vertex)> walk = [&](vertex v) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (vertex w : g.neighbors(v)) {
      if (on[w]) continue;
      on[w] = 1;
      cur.push_back(w);
      walk(w);
      cur.pop_back();
      on[w] = 0;
    }
  };
  for (vertex s = 0; s < g.vertex_count() && k >= 1; ++s) {
    on[s] = 1;
    cur = {s};
    walk(s);
    on[s] = 0;
  }
  return out;
}

inline bool three_colorable(const graph& g) {
  const int n = g.vertex_count();
  std::vector<int> c(n, 0);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long x = code;
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<int>(x % 3);
      x /= 3;
    }
    bool ok = true;
    for (auto e : g.edges()) ok = ok && c[e.u] != c[e.v];
    if (ok) return true;
  }
  return false;
}

// Enumerates all (n-1)-edge subsets that form spanning trees.
inline int max_leaf_spanning(const graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int best = -1;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    if (std::popcount(s) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<int> deg(n, 0);
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i) {
      if (!in(s, i)) continue;
      const int a = find(edges[i].u), b = find(edges[i].v);
      if (a == b) acyclic = false;
      parent[a] = b;
      ++deg[edges[i].u];
      ++deg[edges[i].v];
    }
    if (!acyclic) continue;
    best = std::max(best, static_cast<int>(std::count(deg.begin(), deg.end(), 1)));
  }
  return best;
}

inline int triangle_packing(const graph& g) {
  std::vector<std::array<vertex, 3>> tris;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) tris.push_back({a, b, c});
      }
    }
  }
  int best = 0;
  std::vector<char> used(n, 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int count) {
    best = std::max(best, count);
    for (std::size_t j = i; j < tris.size(); ++j) {
      const auto& t = tris[j];
      if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
      used[t[0]] = used[t[1]] = used[t[2]] = 1;
      go(j + 1, count + 1);
      used[t[0]] = used[t[1]] = used[t[2]] = 0;
    }
  };
  go(0, 0);
  return best;
}

inline int nonblocker(const graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!in(s, v)) continue;
      bool outside = false;
      for (vertex w : g.neighbors(v)) outside = outside || !in(s, w);
      ok = outside;
    }
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline int domination(const graph& g) {
  const int n = g.vertex_count();
  int best = n;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      bool dom = in(s, v);
      for (vertex w : g.neighbors(v)) dom = dom || in(s, w);
      ok = dom;
    }
    if (ok) best = std::min(best, std::popcount(s));
  }
  return best;
}

inline int matching_3d(const fpt::triple_system& ts) {
  const auto& t = ts.triples;
  const int m = static_cast<int>(t.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    if (std::popcount(s) <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      for (int j = i + 1; j < m && ok; ++j) {
        if (in(s, i) && in(s, j)) ok = t[i].a != t[j].a && t[i].b != t[j].b && t[i].c != t[j].c;
      }
    }
    if (ok) best = std::popcount(s);
  }
  return best;
}

// Vertices incident to edges on both sides of the split of E into side / rest.
inline int mid_size(const std::vector<fpt::edge>& side, const std::vector<fpt::edge>& rest) {
  int count = 0;
  std::vector<vertex> seen;
  for (auto a : side) {
    for (vertex v : {a.u, a.v}) {
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
      seen.push_back(v);
      for (auto b : rest) {
        if (b.u == v || b.v == v) {
          ++count;
          break;
        }
      }
    }
  }
  return count;
}

// Branchwidth for graphs with 1..4 edges, where the ternary tree shapes are
// few enough to list by hand: one edge, a two-leaf edge, the 3-leaf star, and
// the three 4-leaf trees with one inner edge.
inline int small_branchwidth(const graph& g) {
  const auto e = g.edges();
  auto leaf_mid = [&](std::size_t i) {
    std::vector<fpt::edge> rest;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j != i) rest.push_back(e[j]);
    }
    return mid_size({e[i]}, rest);
  };
  int leaves = 0;
  for (std::size_t i = 0; i < e.size(); ++i) leaves = std::max(leaves, leaf_mid(i));
  if (e.size() <= 3) return leaves;
  int best = 1 << 20;
  for (int partner = 1; partner <= 3; ++partner) {
    std::vector<fpt::edge> a{e[0], e[partner]}, b;
    for (int j = 1; j <= 3; ++j) {
      if (j != partner) b.push_back(e[j]);
    }
    best = std::min(best, std::max(leaves, mid_size(a, b)));
  }
  return best;
}

}  // namespace brute
