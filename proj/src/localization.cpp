#include "fpt/localization.hpp"

#include <algorithm>
#include <bit>

namespace fpt {

std::vector<triangle> greedy_maximal_packing(const graph& g) {
  std::vector<triangle> packing;
  std::vector<char> used(g.vertex_count(), 0);
  for (vertex a = 0; a < g.vertex_count(); ++a) {
    for (vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (vertex c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        if (used[a] || used[b] || used[c]) continue;
        used[a] = used[b] = used[c] = 1;
        packing.push_back({a, b, c});
      }
    }
  }
  return packing;
}

std::uint64_t outer_guess_ceiling(int k) {
  if (k <= 1) return 1;
  const int bits = 3 * (k - 1);
  return bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << bits;
}

std::uint64_t branch_node_ceiling(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < 2 * k; ++i) {
    if (c > ~std::uint64_t{0} / static_cast<std::uint64_t>(2 * k)) return ~std::uint64_t{0};
    c *= static_cast<std::uint64_t>(2 * k);
  }
  return c;
}

namespace {

class extender {
 public:
  extender(const graph& g, localization_stats& stats) : g_(g), stats_(stats), blocked_(g.vertex_count(), 0) {}

  // Runs the extension search for one guessed collection of partial triangles.
  std::optional<std::vector<triangle>> run(std::vector<partial_triangle> parts) {
    ++stats_.branch_calls;
    nodes_ = 0;
    auto result = branch(parts, 0);
    stats_.branch_nodes += nodes_;
    stats_.max_branch_nodes = std::max(stats_.max_branch_nodes, nodes_);
    return result;
  }

 private:
  bool clique_with(const partial_triangle& p, vertex v) const {
    return std::all_of(p.begin(), p.end(), [&](vertex x) { return x != v && g_.adjacent(x, v); });
  }

  // Lexicographically first B outside `blocked_` completing p to a triangle.
  std::optional<std::vector<vertex>> completion(const partial_triangle& p) const {
    if (p.size() == 3) return std::vector<vertex>{};
    if (p.size() == 2) {
      for (vertex w : g_.neighbors(p[0])) {
        if (!blocked_[w] && g_.adjacent(p[1], w)) return std::vector<vertex>{w};
      }
      return std::nullopt;
    }
    for (vertex w1 : g_.neighbors(p[0])) {
      if (blocked_[w1]) continue;
      for (vertex w2 : g_.neighbors(w1)) {
        if (w2 > w1 && !blocked_[w2] && g_.adjacent(p[0], w2)) return std::vector<vertex>{w1, w2};
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<triangle>> branch(std::vector<partial_triangle>& parts, int depth) {
    ++nodes_;
    stats_.max_branch_depth = std::max(stats_.max_branch_depth, depth);
    for (const auto& p : parts) {
      for (vertex v : p) blocked_[v] = 1;
    }
    std::vector<vertex> a;  // vertices used by the greedy extensions so far
    std::vector<triangle> done;
    std::size_t failed = parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto b = completion(parts[i]);
      if (!b) {
        failed = i;
        break;
      }
      partial_triangle t = parts[i];
      for (vertex w : *b) {
        blocked_[w] = 1;
        a.push_back(w);
        t.push_back(w);
      }
      std::sort(t.begin(), t.end());
      done.push_back({t[0], t[1], t[2]});
    }
    for (const auto& p : parts) {
      for (vertex v : p) blocked_[v] = 0;
    }
    for (vertex w : a) blocked_[w] = 0;
    if (failed == parts.size()) return done;

    // Some vertex of A must belong to the failing part's triangle.
    std::sort(a.begin(), a.end());
    for (vertex v : a) {
      if (!clique_with(parts[failed], v)) continue;
      parts[failed].push_back(v);
      auto r = branch(parts, depth + 1);
      parts[failed].pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

  const graph& g_;
  localization_stats& stats_;
  std::vector<char> blocked_;
  std::uint64_t nodes_ = 0;
};

// Splits `s` into exactly k cliques of size <= 3 (restricted-growth order) and
// calls fn on each split until fn returns true.
template <class Fn>
bool for_each_split(const graph& g, const std::vector<vertex>& s, int k, Fn&& fn) {
  std::vector<partial_triangle> parts;
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (static_cast<int>(parts.size()) + static_cast<int>(s.size() - i) < k) return false;
    if (i == s.size()) return static_cast<int>(parts.size()) == k && fn(parts);
    const vertex v = s[i];
    // Indexed: the recursion may grow `parts` and move its storage.
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].size() < 3 && std::all_of(parts[j].begin(), parts[j].end(), [&](vertex x) { return g.adjacent(x, v); })) {
        parts[j].push_back(v);
        if (self(self, i + 1)) return true;
        parts[j].pop_back();
      }
    }
    if (static_cast<int>(parts.size()) < k) {
      parts.push_back({v});
      if (self(self, i + 1)) return true;
      parts.pop_back();
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace

packing_result triangle_packing_decide(const problem_instance& inst) {
  packing_result out;
  const graph& g = inst.g;
  const int k = inst.k;
  if (k <= 0) {
    out.yes = true;
    out.witness.emplace();
    return out;
  }
  auto greedy = greedy_maximal_packing(g);
  out.stats.greedy_size = static_cast<int>(greedy.size());
  if (static_cast<int>(greedy.size()) >= k) {
    greedy.resize(k);
    out.yes = true;
    out.witness = std::move(greedy);
    return out;
  }
  // Every triangle of a solution meets the packed vertices; guess where.
  std::vector<vertex> packed;
  for (const auto& t : greedy) packed.insert(packed.end(), t.begin(), t.end());
  std::sort(packed.begin(), packed.end());
  const auto count = static_cast<int>(packed.size());
  extender ext(g, out.stats);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    if (std::popcount(mask) < k) continue;
    ++out.stats.outer_guesses;
    std::vector<vertex> s;
    for (int i = 0; i < count; ++i) {
      if ((mask >> i) & 1) s.push_back(packed[i]);
    }
    const bool found = for_each_split(g, s, k, [&](const std::vector<partial_triangle>& parts) {
      ++out.stats.partition_guesses;
      auto r = ext.run(parts);
      if (!r) return false;
      std::sort(r->begin(), r->end());
      out.witness = std::move(r);
      return true;
    });
    if (found) {
      out.yes = true;
      return out;
    }
  }
  return out;
}

}  // namespace fpt
