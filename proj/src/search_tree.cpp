#include "fpt/search_tree.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fpt/errors.hpp"

namespace fpt {

namespace {

// Vertex deletion by masking; live degrees and edge count follow along so
// removal and restoration are O(deg).
class masked_graph {
 public:
  explicit masked_graph(const graph& g)
      : g_(g), alive_(g.vertex_count(), 1), deg_(g.vertex_count()), edges_(g.edge_count()) {
    for (vertex v = 0; v < g.vertex_count(); ++v) deg_[v] = g.degree(v);
  }

  const graph& base() const { return g_; }
  int n() const { return g_.vertex_count(); }
  bool alive(vertex v) const { return alive_[v] != 0; }
  int degree(vertex v) const { return deg_[v]; }
  std::size_t edge_count() const { return edges_; }

  void remove(vertex v) {
    alive_[v] = 0;
    for (vertex u : g_.neighbors(v)) {
      if (alive_[u]) {
        --deg_[u];
        --edges_;
      }
    }
  }

  void restore(vertex v) {
    for (vertex u : g_.neighbors(v)) {
      if (alive_[u]) {
        ++deg_[u];
        ++edges_;
      }
    }
    alive_[v] = 1;
  }

  template <class Fn>
  void for_live_neighbors(vertex v, Fn&& fn) const {
    for (vertex u : g_.neighbors(v)) {
      if (alive_[u]) fn(u);
    }
  }

  // Live vertices of each component that still carries an edge, ascending.
  std::vector<std::vector<vertex>> nontrivial_components() const {
    std::vector<char> seen(n(), 0);
    std::vector<std::vector<vertex>> out;
    for (vertex r = 0; r < n(); ++r) {
      if (!alive_[r] || seen[r] || deg_[r] == 0) continue;
      std::vector<vertex> block{r};
      seen[r] = 1;
      for (std::size_t i = 0; i < block.size(); ++i) {
        for_live_neighbors(block[i], [&](vertex u) {
          if (!seen[u]) {
            seen[u] = 1;
            block.push_back(u);
          }
        });
      }
      std::sort(block.begin(), block.end());
      out.push_back(std::move(block));
    }
    return out;
  }

 private:
  const graph& g_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  std::size_t edges_;
};

// Shared bookkeeping for the recursive solvers.
struct search_state {
  masked_graph mg;
  std::vector<vertex> chosen;
  branch_stats stats;

  explicit search_state(const graph& g) : mg(g) {}

  void enter(int depth) {
    ++stats.nodes_expanded;
    stats.max_depth = std::max(stats.max_depth, depth);
  }

  template <class Range>
  void take(const Range& vs) {
    for (vertex v : vs) {
      mg.remove(v);
      chosen.push_back(v);
    }
  }

  template <class Range>
  void untake(const Range& vs) {
    for (auto it = std::rbegin(vs); it != std::rend(vs); ++it) {
      mg.restore(*it);
      chosen.pop_back();
    }
  }
};

branch_result finish(search_state& st, bool yes, std::vector<vertex> extra = {}) {
  branch_result r;
  r.yes = yes;
  r.stats = st.stats;
  if (yes) {
    auto w = st.chosen;
    w.insert(w.end(), extra.begin(), extra.end());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    r.witness = std::move(w);
  }
  return r;
}

// ---- edge branching ----

bool edge_branch(search_state& st, int k, int depth) {
  st.enter(depth);
  auto& mg = st.mg;
  if (mg.edge_count() == 0) return true;
  if (k <= 0) return false;
  vertex u = 0;
  while (!mg.alive(u) || mg.degree(u) == 0) ++u;
  vertex v = -1;
  for (vertex w : mg.base().neighbors(u)) {
    if (mg.alive(w)) {
      v = w;
      break;
    }
  }
  for (vertex pick : {u, v}) {
    std::array<vertex, 1> one{pick};
    st.take(one);
    if (edge_branch(st, k - 1, depth + 1)) return true;
    st.untake(one);
  }
  return false;
}

// ---- path branching ----

bool find_p4(const masked_graph& mg, std::array<vertex, 4>& p) {
  const auto& g = mg.base();
  for (vertex a = 0; a < mg.n(); ++a) {
    if (!mg.alive(a) || mg.degree(a) == 0) continue;
    for (vertex b : g.neighbors(a)) {
      if (!mg.alive(b)) continue;
      for (vertex c : g.neighbors(b)) {
        if (!mg.alive(c) || c == a) continue;
        for (vertex d : g.neighbors(c)) {
          if (!mg.alive(d) || d == a || d == b) continue;
          p = {a, b, c, d};
          return true;
        }
      }
    }
  }
  return false;
}

// No 4-vertex path: every nontrivial component is a star (K2 included) or a triangle.
std::vector<vertex> cover_stars_and_triangles(const masked_graph& mg) {
  std::vector<vertex> cover;
  for (const auto& block : mg.nontrivial_components()) {
    if (block.size() == 3 && std::all_of(block.begin(), block.end(), [&](vertex v) { return mg.degree(v) == 2; })) {
      cover.push_back(block[0]);
      cover.push_back(block[1]);
      continue;
    }
    auto center = std::find_if(block.begin(), block.end(), [&](vertex v) { return mg.degree(v) >= 2; });
    cover.push_back(center != block.end() ? *center : block.front());
  }
  return cover;
}

bool path_branch(search_state& st, int k, int depth, std::vector<vertex>& base_cover) {
  st.enter(depth);
  auto& mg = st.mg;
  if (mg.edge_count() == 0) return true;
  std::array<vertex, 4> p{};
  if (!find_p4(mg, p)) {
    auto cover = cover_stars_and_triangles(mg);
    if (static_cast<int>(cover.size()) > k) return false;
    base_cover = std::move(cover);
    return true;
  }
  // A 4-vertex path needs two cover vertices.
  if (k < 2) return false;
  const std::array<std::array<vertex, 2>, 3> pairs{{{p[0], p[2]}, {p[1], p[2]}, {p[1], p[3]}}};
  for (const auto& pair : pairs) {
    st.take(pair);
    if (path_branch(st, k - 2, depth + 1, base_cover)) return true;
    st.untake(pair);
  }
  return false;
}

// ---- degree branching ----

// Max degree <= 2: components are paths and cycles.
std::vector<vertex> cover_paths_and_cycles(const masked_graph& mg) {
  std::vector<vertex> cover;
  for (const auto& block : mg.nontrivial_components()) {
    auto end = std::find_if(block.begin(), block.end(), [&](vertex v) { return mg.degree(v) == 1; });
    const bool is_path = end != block.end();
    vertex start = is_path ? *end : block.front();
    std::vector<vertex> order{start};
    vertex prev = -1, cur = start;
    while (true) {
      vertex next = -1;
      mg.for_live_neighbors(cur, [&](vertex u) {
        if (u != prev && next == -1 && u != start) next = u;
      });
      if (next == -1) break;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    // Path on p vertices: positions 1,3,.. give floor(p/2). Cycle: even
    // positions give ceil(p/2).
    for (std::size_t i = is_path ? 1 : 0; i < order.size(); i += 2) cover.push_back(order[i]);
  }
  return cover;
}

bool degree_branch(search_state& st, int k, int depth, std::vector<vertex>& base_cover) {
  st.enter(depth);
  auto& mg = st.mg;
  if (mg.edge_count() == 0) return true;
  if (k <= 0) return false;
  vertex best = -1;
  for (vertex v = 0; v < mg.n(); ++v) {
    if (mg.alive(v) && (best == -1 || mg.degree(v) > mg.degree(best))) best = v;
  }
  if (mg.degree(best) <= 2) {
    auto cover = cover_paths_and_cycles(mg);
    if (static_cast<int>(cover.size()) > k) return false;
    base_cover = std::move(cover);
    return true;
  }
  std::array<vertex, 1> one{best};
  st.take(one);
  if (degree_branch(st, k - 1, depth + 1, base_cover)) return true;
  st.untake(one);
  std::vector<vertex> nbrs;
  mg.for_live_neighbors(best, [&](vertex u) { nbrs.push_back(u); });
  if (static_cast<int>(nbrs.size()) <= k) {
    st.take(nbrs);
    if (degree_branch(st, k - static_cast<int>(nbrs.size()), depth + 1, base_cover)) return true;
    st.untake(nbrs);
  }
  return false;
}

// ---- dominating set ----

struct ds_state {
  const graph& g;
  std::vector<int> dominated_by;  // number of chosen vertices in N[v]
  std::vector<vertex> chosen;
  branch_stats stats;
};

void ds_toggle(ds_state& st, vertex v, int delta) {
  st.dominated_by[v] += delta;
  for (vertex u : st.g.neighbors(v)) st.dominated_by[u] += delta;
}

bool ds_branch(ds_state& st, int k, int depth) {
  ++st.stats.nodes_expanded;
  st.stats.max_depth = std::max(st.stats.max_depth, depth);
  auto it = std::find(st.dominated_by.begin(), st.dominated_by.end(), 0);
  if (it == st.dominated_by.end()) return true;
  if (k <= 0) return false;
  const auto v = static_cast<vertex>(it - st.dominated_by.begin());
  std::vector<vertex> closed{v};
  closed.insert(closed.end(), st.g.neighbors(v).begin(), st.g.neighbors(v).end());
  std::sort(closed.begin(), closed.end());
  for (vertex u : closed) {
    ds_toggle(st, u, +1);
    st.chosen.push_back(u);
    if (ds_branch(st, k - 1, depth + 1)) return true;
    st.chosen.pop_back();
    ds_toggle(st, u, -1);
  }
  return false;
}

}  // namespace

branch_result vc_edge_branch(const problem_instance& inst) {
  search_state st(inst.g);
  bool yes = edge_branch(st, inst.k, 0);
  return finish(st, yes);
}

branch_result vc_path_branch(const problem_instance& inst) {
  search_state st(inst.g);
  std::vector<vertex> base;
  bool yes = path_branch(st, inst.k, 0, base);
  return finish(st, yes, std::move(base));
}

branch_result vc_degree_branch(const problem_instance& inst) {
  search_state st(inst.g);
  std::vector<vertex> base;
  bool yes = degree_branch(st, inst.k, 0, base);
  return finish(st, yes, std::move(base));
}

branch_result ds_degree_branch(const problem_instance& inst, int d) {
  if (inst.g.max_degree() > d) {
    throw contract_error("ds_degree_branch: maximum degree " + std::to_string(inst.g.max_degree()) +
                         " exceeds d=" + std::to_string(d));
  }
  ds_state st{inst.g, std::vector<int>(inst.g.vertex_count(), 0), {}, {}};
  branch_result r;
  r.yes = ds_branch(st, inst.k, 0);
  r.stats = st.stats;
  if (r.yes) {
    std::sort(st.chosen.begin(), st.chosen.end());
    r.witness = st.chosen;
  }
  return r;
}

}  // namespace fpt
