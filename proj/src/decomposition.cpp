#include "fpt/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fpt/errors.hpp"

namespace fpt {

namespace {

struct tree_view {
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor node, edge index)
};

tree_view make_view(const branch_decomposition& bd) {
  tree_view t{std::vector<std::vector<std::pair<int, int>>>(bd.node_count)};
  for (int i = 0; i < static_cast<int>(bd.tree_edges.size()); ++i) {
    auto [a, b] = bd.tree_edges[i];
    t.adj[a].emplace_back(b, i);
    t.adj[b].emplace_back(a, i);
  }
  return t;
}

// Tree rooted at `root`: parent links and a post-order.
struct rooted_tree {
  std::vector<int> parent;
  std::vector<int> parent_edge;
  std::vector<std::vector<int>> children;
  std::vector<int> post_order;
};

rooted_tree root_at(const branch_decomposition& bd, int root) {
  auto view = make_view(bd);
  rooted_tree r{std::vector<int>(bd.node_count, -1), std::vector<int>(bd.node_count, -1),
                std::vector<std::vector<int>>(bd.node_count), {}};
  std::vector<int> pre{root};
  std::vector<char> seen(bd.node_count, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < pre.size(); ++i) {
    int v = pre[i];
    for (auto [u, e] : view.adj[v]) {
      if (seen[u]) continue;
      seen[u] = 1;
      r.parent[u] = v;
      r.parent_edge[u] = e;
      r.children[v].push_back(u);
      pre.push_back(u);
    }
  }
  r.post_order.assign(pre.rbegin(), pre.rend());
  return r;
}

std::string edge_text(const edge& e) {
  return "{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
}

edge normalized(edge e) { return e.u < e.v ? e : edge{e.v, e.u}; }

}  // namespace

std::vector<std::vector<vertex>> compute_mid_sets(const graph& g, const branch_decomposition& bd) {
  std::vector<std::vector<vertex>> mid(bd.tree_edges.size());
  if (bd.node_count == 0) return mid;
  const auto r = root_at(bd, bd.root.value_or(0));
  std::vector<std::map<vertex, int>> below(bd.node_count);
  for (int c : r.post_order) {
    auto& counts = below[c];
    if (const auto& e = bd.leaf_edge[c]) {
      ++counts[e->u];
      ++counts[e->v];
    }
    for (int child : r.children[c]) {
      for (auto [v, cnt] : below[child]) counts[v] += cnt;
      below[child].clear();
    }
    if (r.parent_edge[c] >= 0) {
      auto& m = mid[r.parent_edge[c]];
      for (auto [v, cnt] : counts) {
        if (cnt < g.degree(v)) m.push_back(v);
      }
    }
  }
  return mid;
}

decomposition_report validate_decomposition(const graph& g, const branch_decomposition& bd) {
  using dv = decomposition_violation;
  auto fail = [](dv kind, std::string msg) { return decomposition_report{kind, std::move(msg)}; };
  const int nodes = bd.node_count;
  if (nodes <= 0) return fail(dv::structure, "tree has no nodes");
  if (static_cast<int>(bd.leaf_edge.size()) != nodes) return fail(dv::structure, "leaf map size differs from node count");
  if (static_cast<int>(bd.tree_edges.size()) != nodes - 1) return fail(dv::structure, "tree must have node_count-1 edges");
  for (auto [a, b] : bd.tree_edges) {
    if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) return fail(dv::structure, "tree edge endpoint out of range");
  }
  const auto view = make_view(bd);
  {
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, e] : view.adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != nodes) return fail(dv::structure, "tree is disconnected");
  }
  for (int v = 0; v < nodes; ++v) {
    auto d = view.adj[v].size();
    if (d != 1 && d != 3) return fail(dv::degree, "tree node " + std::to_string(v) + " has degree " + std::to_string(d));
  }
  if (!bd.root) return fail(dv::root, "decomposition is not root-augmented");
  const int root = *bd.root;
  if (root < 0 || root >= nodes || view.adj[root].size() != 1) return fail(dv::root, "root is not a leaf");
  if (bd.leaf_edge[root]) return fail(dv::root, "root leaf carries a graph edge");

  std::set<edge> mapped;
  for (int v = 0; v < nodes; ++v) {
    const bool is_leaf = view.adj[v].size() == 1;
    const auto& e = bd.leaf_edge[v];
    if (!is_leaf) {
      if (e) return fail(dv::bijection, "internal node " + std::to_string(v) + " carries a graph edge");
      continue;
    }
    if (v == root) continue;
    if (!e) return fail(dv::bijection, "leaf " + std::to_string(v) + " carries no graph edge");
    const auto n = g.vertex_count();
    if (e->u < 0 || e->u >= n || e->v < 0 || e->v >= n || !g.adjacent(e->u, e->v)) {
      return fail(dv::bijection, "leaf " + std::to_string(v) + " maps to non-edge " + edge_text(*e));
    }
    if (!mapped.insert(normalized(*e)).second) return fail(dv::bijection, "graph edge " + edge_text(*e) + " mapped twice");
  }
  if (mapped.size() != g.edge_count()) {
    for (const auto& e : g.edges()) {
      if (!mapped.count(e)) return fail(dv::bijection, "graph edge " + edge_text(e) + " not mapped to any leaf");
    }
  }

  if (bd.mid.size() != bd.tree_edges.size()) return fail(dv::mid_mismatch, "middle sets missing");
  // Recompute each middle set from the two components of T - e.
  for (int i = 0; i < static_cast<int>(bd.tree_edges.size()); ++i) {
    auto [a, b] = bd.tree_edges[i];
    std::vector<char> side(nodes, 0);
    std::vector<int> stack{a};
    side[a] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, e] : view.adj[v]) {
        if (e != i && !side[u]) {
          side[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::set<vertex> one, two;
    for (int v = 0; v < nodes; ++v) {
      if (const auto& e = bd.leaf_edge[v]) {
        auto& s = side[v] ? one : two;
        s.insert(e->u);
        s.insert(e->v);
      }
    }
    std::vector<vertex> expect;
    std::set_intersection(one.begin(), one.end(), two.begin(), two.end(), std::back_inserter(expect));
    if (expect != bd.mid[i]) {
      return fail(dv::mid_mismatch, "middle set of tree edge " + std::to_string(a) + "-" + std::to_string(b) +
                                        " differs from its definition");
    }
  }
  return {};
}

int width(const branch_decomposition& bd) {
  std::size_t w = 0;
  for (const auto& m : bd.mid) w = std::max(w, m.size());
  return static_cast<int>(w);
}

branch_decomposition root_augment(const branch_decomposition& bd) {
  if (bd.node_count <= 0) throw domain_error("root_augment: empty tree");
  if (bd.root) throw contract_error("root_augment: decomposition already has a root");
  branch_decomposition out = bd;
  if (out.mid.size() != out.tree_edges.size()) out.mid.assign(out.tree_edges.size(), {});
  const int root = out.node_count++;
  out.leaf_edge.emplace_back();
  if (bd.tree_edges.empty()) {
    out.tree_edges.emplace_back(0, root);
    out.mid.emplace_back();
  } else {
    const int sub = out.node_count++;
    out.leaf_edge.emplace_back();
    auto [a, b] = out.tree_edges[0];
    out.tree_edges[0] = {a, sub};
    out.tree_edges.emplace_back(sub, b);
    out.mid.push_back(out.mid[0]);
    out.tree_edges.emplace_back(sub, root);
    out.mid.emplace_back();
  }
  out.root = root;
  return out;
}

namespace {

// Unrooted tree whose node i < edges.size() is the leaf for edges[i].
branch_decomposition leaves_for(const std::vector<edge>& edges) {
  branch_decomposition bd;
  bd.node_count = static_cast<int>(edges.size());
  for (const auto& e : edges) bd.leaf_edge.emplace_back(normalized(e));
  return bd;
}

int add_internal(branch_decomposition& bd) {
  bd.leaf_edge.emplace_back();
  return bd.node_count++;
}

std::vector<edge> dfs_edge_order(const graph& g) {
  std::vector<edge> order;
  std::set<edge> listed;
  std::vector<char> visited(g.vertex_count(), 0);
  std::function<void(vertex)> visit = [&](vertex v) {
    visited[v] = 1;
    for (vertex u : g.neighbors(v)) {
      if (listed.insert(normalized({v, u})).second) order.push_back(normalized({v, u}));
      if (!visited[u]) visit(u);
    }
  };
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    if (!visited[v] && g.degree(v) > 0) visit(v);
  }
  return order;
}

void require_edges(const graph& g, const char* what) {
  if (g.edge_count() == 0) throw domain_error(std::string(what) + ": graph has no edges");
}

}  // namespace

branch_decomposition heuristic_decomposition(const graph& g) {
  require_edges(g, "heuristic_decomposition");
  const auto order = dfs_edge_order(g);
  const int m = static_cast<int>(order.size());
  auto bd = leaves_for(order);
  if (m == 2) {
    bd.tree_edges.emplace_back(0, 1);
  } else if (m >= 3) {
    // Spine c_1..c_{m-2}: c_1 holds leaves 0 and 1, c_i holds leaf i, the
    // last spine node also holds leaf m-1.
    int prev = -1;
    for (int i = 1; i <= m - 2; ++i) {
      int c = add_internal(bd);
      if (prev == -1) {
        bd.tree_edges.emplace_back(0, c);
      } else {
        bd.tree_edges.emplace_back(prev, c);
      }
      bd.tree_edges.emplace_back(i, c);
      prev = c;
    }
    bd.tree_edges.emplace_back(m - 1, prev);
  }
  bd.mid = compute_mid_sets(g, bd);
  return root_augment(bd);
}

branch_decomposition exact_decomposition_small(const graph& g) {
  require_edges(g, "exact_decomposition_small");
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > exact_decomposition_max_edges) {
    throw size_error("exact_decomposition_small: " + std::to_string(m) + " edges exceed cap " +
                     std::to_string(exact_decomposition_max_edges));
  }
  auto base = leaves_for(edges);
  if (m == 2) base.tree_edges.emplace_back(0, 1);
  if (m <= 2) {
    base.mid = compute_mid_sets(g, base);
    return root_augment(base);
  }
  int c = add_internal(base);
  for (int i = 0; i < 3; ++i) base.tree_edges.emplace_back(i, c);

  branch_decomposition best;
  int best_width = std::numeric_limits<int>::max();
  // Every unrooted ternary tree on leaves 0..m-1 arises exactly once by
  // inserting leaf i on one of the edges of a tree over leaves 0..i-1.
  std::function<void(branch_decomposition&, int)> grow = [&](branch_decomposition& bd, int next) {
    if (next == m) {
      auto mid = compute_mid_sets(g, bd);
      std::size_t w = 0;
      for (const auto& s : mid) w = std::max(w, s.size());
      if (static_cast<int>(w) < best_width) {
        best_width = static_cast<int>(w);
        best = bd;
        best.mid = std::move(mid);
      }
      return;
    }
    const std::size_t count = bd.tree_edges.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto saved = bd.tree_edges[i];
      int s = add_internal(bd);
      bd.tree_edges[i] = {saved.first, s};
      bd.tree_edges.emplace_back(s, saved.second);
      bd.tree_edges.emplace_back(s, next);
      grow(bd, next + 1);
      bd.tree_edges.pop_back();
      bd.tree_edges.pop_back();
      bd.tree_edges[i] = saved;
      bd.leaf_edge.pop_back();
      --bd.node_count;
    }
  };
  grow(base, 3);
  return root_augment(best);
}

// ---- dynamic programs ----

namespace {

constexpr int infinite = std::numeric_limits<int>::max() / 4;

// Decomposition rooted at its root leaf, with per-node middle sets of the
// edge towards the parent. Children are ordered smaller subtree first.
struct dp_frame {
  rooted_tree tree;
  int top = -1;  // the node whose parent edge is e_r
  std::vector<std::vector<vertex>> mid;  // by node
};

dp_frame frame_for(const graph& g, const branch_decomposition& bd) {
  const auto report = validate_decomposition(g, bd);
  if (!report.ok()) throw contract_error("invalid branch decomposition: " + report.message);
  dp_frame f{root_at(bd, *bd.root), -1, std::vector<std::vector<vertex>>(bd.node_count)};
  std::vector<int> size(bd.node_count, 1);
  for (int c : f.tree.post_order) {
    for (int ch : f.tree.children[c]) size[c] += size[ch];
    if (f.tree.parent_edge[c] >= 0) f.mid[c] = bd.mid[f.tree.parent_edge[c]];
  }
  for (auto& ch : f.tree.children) {
    std::stable_sort(ch.begin(), ch.end(), [&](int a, int b) { return size[a] < size[b]; });
  }
  f.top = f.tree.children[*bd.root].front();
  return f;
}

// Position of each vertex of `sub` inside `within` (-1 if absent).
std::vector<int> positions(const std::vector<vertex>& sub, const std::vector<vertex>& within) {
  std::vector<int> pos(sub.size(), -1);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    auto it = std::lower_bound(within.begin(), within.end(), sub[i]);
    if (it != within.end() && *it == sub[i]) pos[i] = static_cast<int>(it - within.begin());
  }
  return pos;
}

std::uint32_t remap(std::uint32_t mask, const std::vector<int>& pos) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if ((mask >> i) & 1U && pos[i] >= 0) out |= std::uint32_t{1} << pos[i];
  }
  return out;
}

// Subset over the mid set -> minimum cover size of G_e agreeing with it.
struct vc_table {
  std::vector<int> best;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> from;  // children's masks at joins
};

constexpr int max_vc_width = 24;
constexpr int max_coloring_width = 20;

}  // namespace

bw_vc_result bw_vertex_cover(const graph& g, const branch_decomposition& bd, int budget) {
  auto f = frame_for(g, bd);
  if (width(bd) > max_vc_width) throw size_error("bw_vertex_cover: width above " + std::to_string(max_vc_width));
  std::vector<vc_table> tables(bd.node_count);
  for (int c : f.tree.post_order) {
    if (c == *bd.root) continue;
    const auto& mid = f.mid[c];
    const std::uint32_t full = std::uint32_t{1} << mid.size();
    auto& t = tables[c];
    t.best.assign(full, infinite);
    if (const auto& e = bd.leaf_edge[c]) {
      // Restrictions of covers of the single edge e: any non-empty X pays |X|;
      // X empty needs an endpoint outside the middle set.
      const bool outside_endpoint = !std::binary_search(mid.begin(), mid.end(), e->u) ||
                                    !std::binary_search(mid.begin(), mid.end(), e->v);
      for (std::uint32_t x = 0; x < full; ++x) {
        if (x != 0) {
          t.best[x] = std::popcount(x);
        } else if (outside_endpoint) {
          t.best[x] = 1;
        }
      }
      continue;
    }
    t.from.assign(full, {0, 0});
    const int a = f.tree.children[c][0];
    const int b = f.tree.children[c][1];
    const auto &ma = f.mid[a], &mb = f.mid[b];
    std::vector<vertex> shared;
    std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(shared));
    const auto a_shared = positions(ma, shared), b_shared = positions(mb, shared);
    const auto a_up = positions(ma, mid), b_up = positions(mb, mid);
    // Only pairs agreeing on the shared vertices are combined; any other pair
    // is dominated by a consistent one with the same union.
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> b_by_key;
    for (std::uint32_t xb = 0; xb < tables[b].best.size(); ++xb) {
      if (tables[b].best[xb] < infinite) b_by_key[remap(xb, b_shared)].push_back(xb);
    }
    for (std::uint32_t xa = 0; xa < tables[a].best.size(); ++xa) {
      const int la = tables[a].best[xa];
      if (la >= infinite) continue;
      const auto key = remap(xa, a_shared);
      auto it = b_by_key.find(key);
      if (it == b_by_key.end()) continue;
      const std::uint32_t up_a = remap(xa, a_up);
      for (std::uint32_t xb : it->second) {
        const int cost = la + tables[b].best[xb] - std::popcount(key);
        const std::uint32_t x = up_a | remap(xb, b_up);
        if (cost < t.best[x]) {
          t.best[x] = cost;
          t.from[x] = {xa, xb};
        }
      }
    }
  }

  bw_vc_result out;
  out.min_cover = tables[f.top].best[0];
  out.yes = out.min_cover <= budget;
  if (!out.yes) return out;
  std::vector<vertex> cover;
  std::function<void(int, std::uint32_t)> collect = [&](int c, std::uint32_t x) {
    const auto& mid = f.mid[c];
    if (const auto& e = bd.leaf_edge[c]) {
      if (x == 0) {
        cover.push_back(std::binary_search(mid.begin(), mid.end(), e->u) ? e->v : e->u);
      }
      for (std::size_t i = 0; i < mid.size(); ++i) {
        if ((x >> i) & 1U) cover.push_back(mid[i]);
      }
      return;
    }
    auto [xa, xb] = tables[c].from[x];
    collect(f.tree.children[c][0], xa);
    collect(f.tree.children[c][1], xb);
  };
  collect(f.top, 0);
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  out.witness = std::move(cover);
  return out;
}

namespace {

// Colorings of a middle set encoded in base 3, digit i = color of mid[i] (0..2).
std::uint64_t encode(const std::vector<vertex>& vs, const std::vector<int>& color) {
  std::uint64_t code = 0;
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) code = code * 3 + static_cast<std::uint64_t>(color[*it]);
  return code;
}

void decode(std::uint64_t code, const std::vector<vertex>& vs, std::vector<int>& color) {
  for (vertex v : vs) {
    color[v] = static_cast<int>(code % 3);
    code /= 3;
  }
}

std::uint64_t power3(std::size_t e) {
  std::uint64_t p = 1;
  while (e--) p *= 3;
  return p;
}

// Coloring of the middle set -> the pair of child colorings it came from.
using coloring_table = std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>>;

}  // namespace

bw_coloring_result bw_three_coloring(const graph& g, const branch_decomposition& bd) {
  auto f = frame_for(g, bd);
  if (width(bd) > max_coloring_width) {
    throw size_error("bw_three_coloring: width above " + std::to_string(max_coloring_width));
  }
  std::vector<coloring_table> tables(bd.node_count);
  std::vector<int> scratch(g.vertex_count(), 0);
  for (int c : f.tree.post_order) {
    if (c == *bd.root) continue;
    const auto& mid = f.mid[c];
    auto& t = tables[c];
    if (const auto& e = bd.leaf_edge[c]) {
      const bool both = mid.size() == 2;
      for (std::uint64_t code = 0; code < power3(mid.size()); ++code) {
        decode(code, mid, scratch);
        if (!both || scratch[e->u] != scratch[e->v]) t.emplace(code, std::make_pair(0, 0));
      }
      continue;
    }
    const int a = f.tree.children[c][0];
    const int b = f.tree.children[c][1];
    const auto &ma = f.mid[a], &mb = f.mid[b];
    std::vector<vertex> shared, only_a, only_b;
    std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(shared));
    for (vertex v : mid) {
      if (std::binary_search(shared.begin(), shared.end(), v)) continue;
      (std::binary_search(ma.begin(), ma.end(), v) ? only_a : only_b).push_back(v);
    }
    // Project each child onto (shared part, part it contributes to mid(e)),
    // keeping one representative per projection.
    auto project = [&](const coloring_table& child, const std::vector<vertex>& child_mid,
                       const std::vector<vertex>& own) {
      std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> by_shared;
      for (const auto& [code, unused] : child) {
        decode(code, child_mid, scratch);
        by_shared[encode(shared, scratch)].emplace(encode(own, scratch), code);
      }
      return by_shared;
    };
    const auto pa = project(tables[a], ma, only_a);
    const auto pb = project(tables[b], mb, only_b);
    for (const auto& [key, a_parts] : pa) {
      auto it = pb.find(key);
      if (it == pb.end()) continue;
      decode(key, shared, scratch);
      for (const auto& [own_a, rep_a] : a_parts) {
        decode(own_a, only_a, scratch);
        for (const auto& [own_b, rep_b] : it->second) {
          decode(own_b, only_b, scratch);
          t.emplace(encode(mid, scratch), std::make_pair(rep_a, rep_b));
        }
      }
    }
  }

  bw_coloring_result out;
  out.yes = !tables[f.top].empty();
  if (!out.yes) return out;

  std::vector<int> color(g.vertex_count(), -1);
  std::function<void(int, std::uint64_t)> assign = [&](int c, std::uint64_t code) {
    const auto& mid = f.mid[c];
    decode(code, mid, scratch);
    for (vertex v : mid) color[v] = scratch[v];
    if (const auto& e = bd.leaf_edge[c]) {
      // Endpoints outside the middle set have degree 1.
      vertex u = e->u, v = e->v;
      if (color[u] < 0 && color[v] < 0) color[u] = 0;
      if (color[u] < 0) color[u] = (color[v] + 1) % 3;
      if (color[v] < 0) color[v] = (color[u] + 1) % 3;
      return;
    }
    auto [ca, cb] = tables[c].at(code);
    assign(f.tree.children[c][0], ca);
    assign(f.tree.children[c][1], cb);
  };
  assign(f.top, 0);
  std::vector<int> result(g.vertex_count(), 1);
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    if (color[v] >= 0) result[v] = color[v] + 1;
  }
  out.coloring = std::move(result);
  return out;
}

// ---- text format ----

branch_decomposition parse_decomposition(std::istream& in, const graph& g) {
  std::string line;
  std::size_t lineno = 0;
  branch_decomposition bd;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    auto node = [&](long long x) {
      if (x < 0 || x >= bd.node_count) throw range_error("line " + std::to_string(lineno) + ": tree node out of range");
      return static_cast<int>(x);
    };
    auto finish_line = [&](bool ok) {
      std::string rest;
      if (!ok || (ss >> rest)) throw parse_error(lineno, "malformed \"" + tag + "\" line");
    };
    if (!have_header) {
      long long count = 0;
      finish_line(tag == "bd" && static_cast<bool>(ss >> count) && count >= 0);
      if (tag != "bd") throw parse_error(lineno, "expected header \"bd <nodes>\"");
      bd.node_count = static_cast<int>(count);
      bd.leaf_edge.assign(bd.node_count, std::nullopt);
      have_header = true;
    } else if (tag == "te") {
      long long a = 0, b = 0;
      finish_line(static_cast<bool>(ss >> a >> b));
      bd.tree_edges.emplace_back(node(a), node(b));
    } else if (tag == "leaf") {
      long long a = 0, u = 0, v = 0;
      finish_line(static_cast<bool>(ss >> a >> u >> v));
      if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count()) {
        throw range_error("line " + std::to_string(lineno) + ": graph vertex out of range");
      }
      bd.leaf_edge[node(a)] = normalized({static_cast<vertex>(u - 1), static_cast<vertex>(v - 1)});
    } else if (tag == "root") {
      long long a = 0;
      finish_line(static_cast<bool>(ss >> a));
      bd.root = node(a);
    } else {
      throw parse_error(lineno, "unknown record \"" + tag + "\"");
    }
  }
  if (!have_header) throw parse_error(lineno, "missing header \"bd <nodes>\"");
  bd.mid = compute_mid_sets(g, bd);
  if (!bd.root) bd = root_augment(bd);
  return bd;
}

branch_decomposition parse_decomposition(const std::string& text, const graph& g) {
  std::istringstream in(text);
  return parse_decomposition(in, g);
}

std::string serialize_decomposition(const branch_decomposition& bd) {
  std::ostringstream out;
  out << "bd " << bd.node_count << '\n';
  for (auto [a, b] : bd.tree_edges) out << "te " << a << ' ' << b << '\n';
  for (int v = 0; v < bd.node_count; ++v) {
    if (const auto& e = bd.leaf_edge[v]) out << "leaf " << v << ' ' << e->u + 1 << ' ' << e->v + 1 << '\n';
  }
  if (bd.root) out << "root " << *bd.root << '\n';
  return out.str();
}

}  // namespace fpt
