#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fpt/graph.hpp"

namespace fpt {

using triangle = std::array<vertex, 3>;

// A vertex, an edge, or (once extended) a full triangle of G; the vertices
// always form a clique.
using partial_triangle = std::vector<vertex>;

// Scans triangles a < b < c lexicographically and keeps each one disjoint
// from those already kept. The result is maximal.
std::vector<triangle> greedy_maximal_packing(const graph& g);

struct localization_stats {
  int greedy_size = 0;
  std::uint64_t outer_guesses = 0;      // subsets S of the greedy packing's vertices tried
  std::uint64_t partition_guesses = 0;  // splits of S into k partial triangles
  std::uint64_t branch_calls = 0;       // top-level extension searches
  std::uint64_t branch_nodes = 0;       // total over all searches
  std::uint64_t max_branch_nodes = 0;   // largest single search tree
  int max_branch_depth = 0;
};

// Ceilings the counters must respect: 2^{3(k-1)} outer guesses and
// (2k)^{2k} nodes per extension search.
std::uint64_t outer_guess_ceiling(int k);
std::uint64_t branch_node_ceiling(int k);

struct packing_result {
  bool yes = false;
  std::optional<std::vector<triangle>> witness;  // k disjoint triangles
  localization_stats stats;
};

// k vertex-disjoint triangles by greedy localization: a maximal packing of
// r < k triangles leaves at most 3(k-1) vertices that every solution triangle
// must touch. Every subset S of them, split into k cliques of size <= 3, seeds
// a backtracking extension that re-routes a vertex into the failing partial
// triangle whenever the greedy extension gets stuck.
packing_result triangle_packing_decide(const problem_instance& inst);

}  // namespace fpt
