#pragma once

#include <cstdint>

#include "fpt/graph.hpp"

namespace fpt::gen {

graph path(int n);
graph cycle(int n);  // n >= 3, or n <= 2 degenerating to a path
// K_{1,leaves}: center 0, leaves 1..leaves.
graph star(int leaves);
graph complete(int n);
// rows x cols grid, vertex r*cols + c.
graph grid(int rows, int cols);

// Uniform graph with exactly m edges. Same seed, same edge set.
graph random(int n, std::int64_t m, std::uint64_t seed);

// Exactly m edges, containing a path on k vertices laid over a random vertex
// permutation. Requires k <= n and k-1 <= m <= n(n-1)/2.
graph planted_path(int n, std::int64_t m, int k, std::uint64_t seed);

// Connected variant of random(): a random spanning tree plus extra edges.
graph random_connected(int n, std::int64_t m, std::uint64_t seed);

// Disjoint union, ids of b shifted by a.vertex_count().
graph disjoint_union(const graph& a, const graph& b);

// `draws` uniform triples over A x B x C; repeats collapse, so the system may
// hold fewer.
triple_system random_triples(int size_a, int size_b, int size_c, int draws, std::uint64_t seed);

}  // namespace fpt::gen
