#include "fpt/matching.hpp"

#include <limits>
#include <queue>

namespace fpt {

namespace {

constexpr int unreached = std::numeric_limits<int>::max();

class hopcroft_karp {
 public:
  explicit hopcroft_karp(const bipartite_graph& h)
      : h_(h), m_{std::vector<int>(h.left, -1), std::vector<int>(h.right, -1), 0}, dist_(h.left) {}

  bipartite_matching run() {
    while (layer()) {
      for (int u = 0; u < h_.left; ++u) {
        if (m_.mate_left[u] == -1 && augment(u)) ++m_.size;
      }
    }
    return m_;
  }

 private:
  // BFS layering from free left vertices; true if a free right vertex is reachable.
  bool layer() {
    std::queue<int> q;
    for (int u = 0; u < h_.left; ++u) {
      dist_[u] = m_.mate_left[u] == -1 ? 0 : unreached;
      if (dist_[u] == 0) q.push(u);
    }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int r : h_.adj[u]) {
        int w = m_.mate_right[r];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == unreached) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool augment(int u) {
    for (int r : h_.adj[u]) {
      int w = m_.mate_right[r];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && augment(w))) {
        m_.mate_left[u] = r;
        m_.mate_right[r] = u;
        return true;
      }
    }
    dist_[u] = unreached;
    return false;
  }

  const bipartite_graph& h_;
  bipartite_matching m_;
  std::vector<int> dist_;
};

}  // namespace

bipartite_matching maximum_matching(const bipartite_graph& h) { return hopcroft_karp(h).run(); }

bipartite_cover koenig_cover(const bipartite_graph& h, const bipartite_matching& m) {
  std::vector<char> zl(h.left, 0), zr(h.right, 0);
  std::queue<int> q;
  for (int u = 0; u < h.left; ++u) {
    if (m.mate_left[u] == -1) {
      zl[u] = 1;
      q.push(u);
    }
  }
  // Non-matching edges left->right, matching edges right->left.
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int r : h.adj[u]) {
      if (zr[r] || m.mate_left[u] == r) continue;
      zr[r] = 1;
      int w = m.mate_right[r];
      if (w != -1 && !zl[w]) {
        zl[w] = 1;
        q.push(w);
      }
    }
  }
  bipartite_cover c{std::vector<char>(h.left), std::vector<char>(h.right)};
  for (int u = 0; u < h.left; ++u) c.left[u] = !zl[u];
  for (int r = 0; r < h.right; ++r) c.right[r] = zr[r];
  return c;
}

}  // namespace fpt
