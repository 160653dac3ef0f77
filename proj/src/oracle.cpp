#include "fpt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "fpt/errors.hpp"

namespace fpt::oracle {

namespace {

using mask = std::uint64_t;

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw size_error(std::string(what) + ": instance size " + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  }
  if (n > 62) throw size_error(std::string(what) + ": cap above 62 is not supported");
}

std::vector<mask> bit_adjacency(const graph& g) {
  std::vector<mask> adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= mask{1} << e.v;
    adj[e.v] |= mask{1} << e.u;
  }
  return adj;
}

std::vector<vertex> members(mask s) {
  std::vector<vertex> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

mask next_same_popcount(mask x) {
  mask c = x & (~x + 1);
  mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls fn(subset) for all size-s subsets of n elements until fn returns true.
template <class Fn>
bool any_subset_of_size(int n, int s, Fn&& fn) {
  if (s > n) return false;
  if (s == 0) return fn(mask{0});
  const mask limit = mask{1} << n;
  for (mask x = (mask{1} << s) - 1; x < limit; x = next_same_popcount(x)) {
    if (fn(x)) return true;
  }
  return false;
}

bool covers(const std::vector<std::pair<int, int>>& edges, mask s) {
  for (auto [u, v] : edges) {
    if (!((s >> u) & 1) && !((s >> v) & 1)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> edge_pairs(const graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

bool connected_within(const std::vector<mask>& adj, mask s) {
  if (s == 0) return true;
  mask seen = s & (~s + 1);
  mask frontier = seen;
  while (frontier) {
    mask next = 0;
    for (vertex v : members(frontier)) next |= adj[v];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

}  // namespace

vc_solution vc_opt(const graph& g, int cap) {
  const int n = g.vertex_count();
  check_cap(n, cap, "vc_opt");
  const auto es = edge_pairs(g);
  vc_solution best;
  for (int s = 0; s <= n; ++s) {
    mask found = 0;
    if (any_subset_of_size(n, s, [&](mask x) {
          if (!covers(es, x)) return false;
          found = x;
          return true;
        })) {
      best.size = s;
      best.cover = members(found);
      return best;
    }
  }
  return best;  // unreachable: V itself is a cover
}

std::vector<std::vector<vertex>> enumerate_min_vertex_covers(const graph& g, int cap) {
  const int n = g.vertex_count();
  check_cap(n, cap, "enumerate_min_vertex_covers");
  const auto es = edge_pairs(g);
  std::vector<std::vector<vertex>> out;
  for (int s = 0; s <= n && out.empty(); ++s) {
    any_subset_of_size(n, s, [&](mask x) {
      if (covers(es, x)) out.push_back(members(x));
      return false;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

int longest_path_vertices(const graph& g, int cap) {
  const int n = g.vertex_count();
  check_cap(n, cap, "longest_path_vertices");
  if (n == 0) return 0;
  const auto adj = bit_adjacency(g);
  // ends[s]: vertices v such that some simple path visits exactly s and ends at v.
  std::vector<mask> ends(std::size_t{1} << n, 0);
  int best = 1;
  for (vertex v = 0; v < n; ++v) ends[mask{1} << v] = mask{1} << v;
  for (mask s = 1; s < (mask{1} << n); ++s) {
    if (!ends[s]) continue;
    best = std::max(best, std::popcount(s));
    for (vertex v : members(ends[s])) {
      for (vertex u : members(adj[v] & ~s)) ends[s | (mask{1} << u)] |= mask{1} << u;
    }
  }
  return best;
}

bool is_3_colorable(const graph& g, int cap) {
  const int n = g.vertex_count();
  check_cap(n, cap, "is_3_colorable");
  const auto adj = bit_adjacency(g);
  std::vector<int> color(n, 0);
  // Plain assignment in vertex order, rejecting a color only when it clashes
  // with an already-colored neighbor.
  auto assign = [&](auto&& self, vertex v) -> bool {
    if (v == n) return true;
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (vertex u : members(adj[v] & ((mask{1} << v) - 1))) {
        if (color[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1)) return true;
    }
    color[v] = 0;
    return false;
  };
  return assign(assign, 0);
}

int max_leaf(const graph& g, int cap) {
  const int n = g.vertex_count();
  check_cap(n, cap, "max_leaf");
  if (n == 0) throw domain_error("max_leaf: empty graph");
  const auto adj = bit_adjacency(g);
  const mask all = (n == 64) ? ~mask{0} : (mask{1} << n) - 1;
  if (!connected_within(adj, all)) throw domain_error("max_leaf: graph is disconnected");
  if (n == 1) return 0;
  if (n == 2) return 2;
  // For n >= 3 the non-leaves of a spanning tree form a connected dominating
  // set, and every connected dominating set I yields a tree with >= n-|I|
  // leaves. Minimise |I| over all subsets.
  for (int s = 1; s <= n; ++s) {
    if (any_subset_of_size(n, s, [&](mask x) {
          if (!connected_within(adj, x)) return false;
          for (vertex v : members(all & ~x)) {
            if (!(adj[v] & x)) return false;
          }
          return true;
        })) {
      return n - s;
    }
  }
  return 0;
}

int max_triangle_packing(const graph& g, int cap) {
  const int n = g.vertex_count();
  check_cap(n, cap, "max_triangle_packing");
  const auto adj = bit_adjacency(g);
  int best = 0;
  auto search = [&](auto&& self, mask used, int count) -> void {
    best = std::max(best, count);
    mask free = ((n == 64) ? ~mask{0} : (mask{1} << n) - 1) & ~used;
    if (count + std::popcount(free) / 3 <= best) return;
    // Lowest free vertex either stays unused or joins one of its triangles.
    vertex v = std::countr_zero(free);
    mask rest = used | (mask{1} << v);
    for (vertex a : members(adj[v] & ~rest)) {
      for (vertex b : members(adj[v] & adj[a] & ~rest)) {
        if (b <= a) continue;
        self(self, rest | (mask{1} << a) | (mask{1} << b), count + 1);
      }
    }
    self(self, rest, count);
  };
  if (n > 0) search(search, 0, 0);
  return best;
}

int max_3dm(const triple_system& ts, int cap) {
  const auto& t = ts.triples;
  const int m = static_cast<int>(t.size());
  if (m > cap) throw size_error("max_3dm: " + std::to_string(m) + " triples exceed cap " + std::to_string(cap));
  int best = 0;
  std::vector<char> used_a(ts.size_a, 0), used_b(ts.size_b, 0), used_c(ts.size_c, 0);
  auto search = [&](auto&& self, int i, int count) -> void {
    best = std::max(best, count);
    if (i == m || count + (m - i) <= best) return;
    const auto& x = t[i];
    if (!used_a[x.a] && !used_b[x.b] && !used_c[x.c]) {
      used_a[x.a] = used_b[x.b] = used_c[x.c] = 1;
      self(self, i + 1, count + 1);
      used_a[x.a] = used_b[x.b] = used_c[x.c] = 0;
    }
    self(self, i + 1, count);
  };
  search(search, 0, 0);
  return best;
}

int max_nonblocker(const graph& g, int cap) {
  const int n = g.vertex_count();
  check_cap(n, cap, "max_nonblocker");
  const auto adj = bit_adjacency(g);
  for (int s = n; s > 0; --s) {
    if (any_subset_of_size(n, s, [&](mask x) {
          for (vertex v : members(x)) {
            if (!(adj[v] & ~x)) return false;
          }
          return true;
        })) {
      return s;
    }
  }
  return 0;
}

int dominating_opt(const graph& g, int cap) {
  const int n = g.vertex_count();
  check_cap(n, cap, "dominating_opt");
  const auto adj = bit_adjacency(g);
  const mask all = (n == 64) ? ~mask{0} : (mask{1} << n) - 1;
  for (int s = 0; s <= n; ++s) {
    if (any_subset_of_size(n, s, [&](mask x) {
          mask dom = x;
          for (vertex v : members(x)) dom |= adj[v];
          return dom == all;
        })) {
      return s;
    }
  }
  return n;
}

bool is_vertex_cover(const graph& g, std::span<const vertex> s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) return false;
    in[v] = 1;
  }
  for (const auto& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

bool is_dominating_set(const graph& g, std::span<const vertex> s) {
  std::vector<char> dom(g.vertex_count(), 0);
  for (vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) return false;
    dom[v] = 1;
    for (vertex u : g.neighbors(v)) dom[u] = 1;
  }
  return std::all_of(dom.begin(), dom.end(), [](char c) { return c != 0; });
}

bool is_nonblocker(const graph& g, std::span<const vertex> s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (vertex v : s) {
    if (v < 0 || v >= g.vertex_count() || in[v]) return false;
    in[v] = 1;
  }
  for (vertex v : s) {
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](vertex u) { return !in[u]; })) return false;
  }
  return true;
}

bool is_simple_path(const graph& g, std::span<const vertex> seq) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    vertex v = seq[i];
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
  }
  return true;
}

bool is_triangle_packing(const graph& g, std::span<const std::array<vertex, 3>> triangles) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& t : triangles) {
    for (vertex v : t) {
      if (v < 0 || v >= g.vertex_count() || used[v]) return false;
      used[v] = 1;
    }
    if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[1], t[2]) || !g.adjacent(t[0], t[2])) return false;
  }
  return true;
}

bool is_3dm_matching(const triple_system& ts, std::span<const triple> m) {
  std::vector<char> a(ts.size_a, 0), b(ts.size_b, 0), c(ts.size_c, 0);
  for (const auto& x : m) {
    if (!std::binary_search(ts.triples.begin(), ts.triples.end(), x)) return false;
    if (a[x.a] || b[x.b] || c[x.c]) return false;
    a[x.a] = b[x.b] = c[x.c] = 1;
  }
  return true;
}

bool is_proper_coloring(const graph& g, std::span<const int> colors, int q) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  for (int c : colors) {
    if (c < 1 || c > q) return false;
  }
  for (const auto& e : g.edges()) {
    if (colors[e.u] == colors[e.v]) return false;
  }
  return true;
}

bool deletion_leaves_edgeless(const graph& g, std::span<const vertex> s) {
  return is_vertex_cover(g, s);
}

}  // namespace fpt::oracle
