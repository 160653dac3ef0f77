#pragma once

#include <vector>

namespace fpt {

// Bipartite graph with parts L = 0..left-1 and R = 0..right-1, edges given
// as adjacency lists from the left side.
struct bipartite_graph {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;
};

struct bipartite_matching {
  std::vector<int> mate_left;   // -1 when unmatched
  std::vector<int> mate_right;  // -1 when unmatched
  int size = 0;
};

// Hopcroft-Karp maximum matching.
bipartite_matching maximum_matching(const bipartite_graph& h);

struct bipartite_cover {
  std::vector<char> left;
  std::vector<char> right;
};

// Minimum vertex cover from a maximum matching (Koenig): with Z the vertices
// reachable from unmatched left vertices by alternating paths, the cover is
// (L \ Z) + (R intersect Z).
bipartite_cover koenig_cover(const bipartite_graph& h, const bipartite_matching& m);

}  // namespace fpt
