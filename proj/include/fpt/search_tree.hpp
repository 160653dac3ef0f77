#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpt/graph.hpp"

namespace fpt {

struct branch_stats {
  std::uint64_t nodes_expanded = 0;
  int max_depth = 0;
};

struct branch_result {
  bool yes = false;
  std::optional<std::vector<vertex>> witness;  // sorted, present iff yes
  branch_stats stats;
};

// Two-way branching on the endpoints of the lexicographically smallest edge.
// Search tree has at most 2^{k+1}-1 nodes.
branch_result vc_edge_branch(const problem_instance& inst);

// Three-way branching on the pairs {v1,v3}, {v2,v3}, {v2,v4} of the first
// 4-vertex path found by DFS, two budget units per level. Without such a
// path every component is a star or a triangle and is covered directly.
branch_result vc_path_branch(const problem_instance& inst);

// Branch on "v or N(v)" for a maximum-degree vertex of degree >= 3; graphs of
// maximum degree <= 2 are disjoint paths and cycles and are solved directly.
branch_result vc_degree_branch(const problem_instance& inst);

// Dominating set of size <= k when max degree <= d: pick the smallest
// undominated vertex and branch over its closed neighborhood.
// Throws contract_error if some vertex has degree > d.
branch_result ds_degree_branch(const problem_instance& inst, int d);

}  // namespace fpt
