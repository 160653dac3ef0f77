#include "fpt/kernel.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "fpt/errors.hpp"
#include "fpt/matching.hpp"

namespace fpt {

std::vector<vertex> reduced_graph::lift(std::span<const vertex> witness) const {
  std::vector<vertex> out = forced;
  for (vertex v : witness) out.push_back(original_id.at(static_cast<std::size_t>(v)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long nt_bound(int k) { return 2LL * k; }
long long nonblocker_bound(int k) { return 2LL * k - 2; }
long long maxleaf_bound(int k_reduced) { return 8LL * k_reduced; }
long long threedm_bound(int k) {
  const long long j = k - 1;
  return j <= 0 ? 0 : 3 * j * (2 * j * k + 1);
}

// ---- Nemhauser-Trotter ----

nt_partition nt_half_integral(const graph& g) {
  const int n = g.vertex_count();
  bipartite_graph dc{n, n, std::vector<std::vector<int>>(n)};
  for (const auto& e : g.edges()) {
    dc.adj[e.u].push_back(e.v);
    dc.adj[e.v].push_back(e.u);
  }
  const auto cover = koenig_cover(dc, maximum_matching(dc));
  nt_partition p;
  for (vertex v = 0; v < n; ++v) {
    switch (cover.left[v] + cover.right[v]) {
      case 0: p.v0.push_back(v); break;
      case 1: p.half.push_back(v); break;
      default: p.v1.push_back(v); break;
    }
  }
  return p;
}

graph_kernel nt_kernel_vc(const problem_instance& inst) {
  const auto p = nt_half_integral(inst.g);
  const int forced = static_cast<int>(p.v1.size());
  if (forced > inst.k) return decided{false};
  const int k_rest = inst.k - forced;
  if (static_cast<long long>(p.half.size()) > 2LL * k_rest) return decided{false};
  auto sub = induced_subgraph(inst.g, p.half);
  return reduced_graph{{std::move(sub.g), k_rest}, std::move(sub.old_id), p.v1};
}

// ---- Non-Blocker ----

graph_kernel nonblocker_kernel(const problem_instance& inst) {
  const graph& g = inst.g;
  std::vector<vertex> keep;
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  auto sub = induced_subgraph(g, keep);
  const graph& h = sub.g;
  if (h.vertex_count() == 0) return decided{inst.k <= 0};

  std::vector<int> parity(h.vertex_count(), -1);
  std::array<std::vector<vertex>, 2> side;
  for (vertex r = 0; r < h.vertex_count(); ++r) {
    if (parity[r] != -1) continue;
    parity[r] = 0;
    std::vector<vertex> queue{r};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      vertex v = queue[i];
      side[parity[v]].push_back(v);
      for (vertex u : h.neighbors(v)) {
        if (parity[u] == -1) {
          parity[u] = parity[v] ^ 1;
          queue.push_back(u);
        }
      }
    }
  }
  auto& larger = side[0].size() >= side[1].size() ? side[0] : side[1];
  // Each BFS vertex has its parent (or, for a root, its first child) on the
  // other side; re-checked here rather than assumed.
  const bool side_valid = std::all_of(larger.begin(), larger.end(), [&](vertex v) {
    auto nb = h.neighbors(v);
    return std::any_of(nb.begin(), nb.end(), [&](vertex u) { return parity[u] != parity[v]; });
  });
  if (side_valid && inst.k <= static_cast<int>(larger.size())) return decided{true};
  return reduced_graph{{h, inst.k}, std::move(sub.old_id), {}};
}

// ---- Max-Leaf ----

namespace {

class mutable_graph {
 public:
  explicit mutable_graph(const graph& g) : adj_(g.vertex_count()), alive_(g.vertex_count(), 1) {
    for (const auto& e : g.edges()) {
      adj_[e.u].insert(e.v);
      adj_[e.v].insert(e.u);
    }
    live_ = g.vertex_count();
  }

  int size() const { return static_cast<int>(adj_.size()); }
  int live() const { return live_; }
  bool alive(vertex v) const { return alive_[v] != 0; }
  int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::set<vertex>& neighbors(vertex v) const { return adj_[v]; }

  void remove(vertex v) {
    for (vertex u : adj_[v]) adj_[u].erase(v);
    adj_[v].clear();
    alive_[v] = 0;
    --live_;
  }

  // Removes degree-2 vertex v and joins its two neighbors.
  void contract(vertex v) {
    auto it = adj_[v].begin();
    vertex a = *it++;
    vertex b = *it;
    remove(v);
    adj_[a].insert(b);
    adj_[b].insert(a);
  }

  std::pair<graph, std::vector<vertex>> compact() const {
    std::vector<vertex> new_id(adj_.size(), -1), old_id;
    for (vertex v = 0; v < size(); ++v) {
      if (alive_[v]) {
        new_id[v] = static_cast<vertex>(old_id.size());
        old_id.push_back(v);
      }
    }
    std::vector<edge> es;
    for (vertex v : old_id) {
      for (vertex u : adj_[v]) {
        if (v < u) es.push_back({new_id[v], new_id[u]});
      }
    }
    return {graph::from_edges(static_cast<int>(old_id.size()), es), std::move(old_id)};
  }

 private:
  std::vector<std::set<vertex>> adj_;
  std::vector<char> alive_;
  int live_ = 0;
};

bool apply_r1(mutable_graph& mg) {
  for (vertex v = 0; v < mg.size(); ++v) {
    if (mg.alive(v) && mg.degree(v) == 1 && mg.degree(*mg.neighbors(v).begin()) == 2) {
      mg.remove(v);
      return true;
    }
  }
  return false;
}

bool apply_r2(mutable_graph& mg) {
  for (vertex u = 0; u < mg.size(); ++u) {
    if (!mg.alive(u)) continue;
    vertex first = -1;
    for (vertex v : mg.neighbors(u)) {
      if (mg.degree(v) != 1) continue;
      if (first == -1) {
        first = v;
      } else {
        mg.remove(v);
        return true;
      }
    }
  }
  return false;
}

// Chain: internal vertices of degree 2, endpoints of degree > 2 (possibly the
// same vertex). A chain with >= 4 edges loses its second internal vertex.
bool apply_r3(mutable_graph& mg) {
  for (vertex u = 0; u < mg.size(); ++u) {
    if (!mg.alive(u) || mg.degree(u) <= 2) continue;
    for (vertex first : mg.neighbors(u)) {
      if (mg.degree(first) != 2) continue;
      std::vector<vertex> internal{first};
      vertex prev = u, cur = first;
      while (mg.degree(cur) == 2) {
        const auto& nb = mg.neighbors(cur);
        vertex next = *nb.begin() == prev ? *std::next(nb.begin()) : *nb.begin();
        prev = cur;
        cur = next;
        if (mg.degree(cur) == 2) internal.push_back(cur);
      }
      if (mg.degree(cur) > 2 && internal.size() + 1 >= 4) {
        mg.contract(internal[1]);
        return true;
      }
    }
  }
  return false;
}

// A graph whose vertices all have degree 2 is a cycle (input is connected);
// every cycle has exactly two leaves in its best spanning tree.
bool shrink_cycle(mutable_graph& mg) {
  if (mg.live() <= 3) return false;
  for (vertex v = 0; v < mg.size(); ++v) {
    if (mg.alive(v) && mg.degree(v) != 2) return false;
  }
  for (vertex v = 0; v < mg.size(); ++v) {
    if (mg.alive(v)) {
      mg.contract(v);
      return true;
    }
  }
  return false;
}

}  // namespace

graph_kernel maxleaf_kernel(const problem_instance& inst, maxleaf_counters* counters) {
  if (inst.g.vertex_count() == 0) throw domain_error("maxleaf_kernel: empty graph");
  if (!is_connected(inst.g)) throw domain_error("maxleaf_kernel: graph is disconnected");
  maxleaf_counters local;
  auto& c = counters ? *counters : local;
  mutable_graph mg(inst.g);
  int k = inst.k;
  while (true) {
    if (apply_r1(mg)) {
      ++c.r1;
    } else if (apply_r2(mg)) {
      ++c.r2;
      --k;
    } else if (apply_r3(mg)) {
      ++c.r3;
    } else if (shrink_cycle(mg)) {
      ++c.cycle;
    } else {
      break;
    }
  }
  if (static_cast<long long>(mg.live()) >= maxleaf_bound(k)) return decided{true};
  auto [h, old_id] = mg.compact();
  return reduced_graph{{std::move(h), k}, std::move(old_id), {}};
}

// ---- 3-Dimensional Matching ----

namespace {

using key2 = std::pair<int, int>;

// Keeps the first `limit` triples (lexicographic) of each class under `key`.
template <class Key>
bool truncate_classes(std::vector<triple>& ts, long long limit, Key key) {
  std::map<decltype(key(ts.front())), long long> seen;
  std::vector<triple> kept;
  kept.reserve(ts.size());
  for (const auto& t : ts) {
    if (++seen[key(t)] <= limit) kept.push_back(t);
  }
  const bool changed = kept.size() != ts.size();
  ts = std::move(kept);
  return changed;
}

}  // namespace

triple_kernel threedm_kernel(const triple_system& ts, int k) {
  if (k <= 0) return decided{true};
  std::vector<char> a(ts.size_a, 0), b(ts.size_b, 0), c(ts.size_c, 0);
  int greedy = 0;
  for (const auto& t : ts.triples) {
    if (!a[t.a] && !b[t.b] && !c[t.c]) {
      a[t.a] = b[t.b] = c[t.c] = 1;
      ++greedy;
    }
  }
  if (greedy >= k) return decided{true};

  auto triples = ts.triples;
  const long long pair_limit = k;
  const long long single_limit = 2LL * (k - 1) * k + 1;
  bool changed = true;
  while (changed && !triples.empty()) {
    changed = false;
    changed |= truncate_classes(triples, pair_limit, [](const triple& t) { return key2{t.a, t.b}; });
    changed |= truncate_classes(triples, pair_limit, [](const triple& t) { return key2{t.a, t.c}; });
    changed |= truncate_classes(triples, pair_limit, [](const triple& t) { return key2{t.b, t.c}; });
    changed |= truncate_classes(triples, single_limit, [](const triple& t) { return t.a; });
    changed |= truncate_classes(triples, single_limit, [](const triple& t) { return t.b; });
    changed |= truncate_classes(triples, single_limit, [](const triple& t) { return t.c; });
  }
  return reduced_triples{triple_system::make(ts.size_a, ts.size_b, ts.size_c, std::move(triples)), k};
}

}  // namespace fpt
