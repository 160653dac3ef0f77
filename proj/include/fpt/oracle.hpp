#pragma once

#include <array>
#include <span>
#include <vector>

#include "fpt/graph.hpp"

// Exhaustive reference solvers. They share no code with the FPT algorithms
// (each builds its own bitmask adjacency) and refuse instances above their cap.
namespace fpt::oracle {

inline constexpr int default_cap = 20;
inline constexpr int max_leaf_cap = 14;
inline constexpr int triple_cap = 30;

struct vc_solution {
  int size = 0;
  std::vector<vertex> cover;
};

// Minimum vertex cover by enumerating subsets in increasing size.
vc_solution vc_opt(const graph& g, int cap = default_cap);

// Every vertex cover of minimum size, each sorted, in colex order of bitmasks.
std::vector<std::vector<vertex>> enumerate_min_vertex_covers(const graph& g, int cap = default_cap);

// Maximum number of vertices on a simple path (0 for the empty graph).
int longest_path_vertices(const graph& g, int cap = default_cap);

bool is_3_colorable(const graph& g, int cap = default_cap);

// Maximum leaf count over spanning trees of a connected graph. A single
// vertex has 0 leaves, K2 has 2. Throws domain_error when g is empty or
// disconnected.
int max_leaf(const graph& g, int cap = max_leaf_cap);

int max_triangle_packing(const graph& g, int cap = default_cap);

int max_3dm(const triple_system& ts, int cap = triple_cap);

int max_nonblocker(const graph& g, int cap = default_cap);

int dominating_opt(const graph& g, int cap = default_cap);

// Independent predicate checkers used to validate every witness.
bool is_vertex_cover(const graph& g, std::span<const vertex> s);
bool is_dominating_set(const graph& g, std::span<const vertex> s);
bool is_nonblocker(const graph& g, std::span<const vertex> s);
bool is_simple_path(const graph& g, std::span<const vertex> seq);
bool is_triangle_packing(const graph& g, std::span<const std::array<vertex, 3>> triangles);
bool is_3dm_matching(const triple_system& ts, std::span<const triple> m);
// colors[v] in 1..q for every v, endpoints of every edge differ.
bool is_proper_coloring(const graph& g, std::span<const int> colors, int q);
// g - s has no edges (s may contain duplicates).
bool deletion_leaves_edgeless(const graph& g, std::span<const vertex> s);

}  // namespace fpt::oracle
