#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpt/graph.hpp"

namespace fpt {

// Branch decomposition (T, tau). Tree nodes are 0..node_count-1. Non-root
// leaves carry exactly one graph edge; the optional root leaf carries none.
// mid[i] is the middle set of tree_edges[i], sorted.
struct branch_decomposition {
  int node_count = 0;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<std::optional<edge>> leaf_edge;  // indexed by tree node, edges stored with u < v
  std::optional<int> root;
  std::vector<std::vector<vertex>> mid;
};

// Middle sets from per-subtree edge incidence counts: v is in mid(e) iff
// some but not all of v's edges sit below e.
std::vector<std::vector<vertex>> compute_mid_sets(const graph& g, const branch_decomposition& bd);

enum class decomposition_violation { none, structure, degree, root, bijection, mid_mismatch };

struct decomposition_report {
  decomposition_violation kind = decomposition_violation::none;
  std::string message;
  bool ok() const noexcept { return kind == decomposition_violation::none; }
};

// Checks tree shape, node degrees (1 or 3), the root leaf, the leaf-to-edge
// bijection, and recomputes every middle set from the two sides of each
// tree edge. Reports the first violation found.
decomposition_report validate_decomposition(const graph& g, const branch_decomposition& bd);

int width(const branch_decomposition& bd);

// Subdivides tree_edges[0] and hangs a new root leaf off the subdivision
// node; a single-node tree gets the root leaf attached directly. Middle sets
// carry over, the root edge's is empty.
// Throws domain_error for an empty tree, contract_error if already rooted.
branch_decomposition root_augment(const branch_decomposition& bd);

// Caterpillar over a DFS edge order, root-augmented. domain_error when g has no edges.
branch_decomposition heuristic_decomposition(const graph& g);

inline constexpr int exact_decomposition_max_edges = 8;

// Minimum-width decomposition by enumerating every ternary tree over the
// edges, root-augmented. size_error above 8 edges, domain_error when edgeless.
branch_decomposition exact_decomposition_small(const graph& g);

struct bw_vc_result {
  bool yes = false;
  int min_cover = 0;  // vc(G), exact
  std::optional<std::vector<vertex>> witness;
};

// Vertex cover of size <= budget by dynamic programming over a validated,
// root-augmented decomposition. Throws contract_error for an invalid bd.
bw_vc_result bw_vertex_cover(const graph& g, const branch_decomposition& bd, int budget);

struct bw_coloring_result {
  bool yes = false;
  std::optional<std::vector<int>> coloring;  // colors 1..3 per vertex
};

bw_coloring_result bw_three_coloring(const graph& g, const branch_decomposition& bd);

// Text format: "bd <nodes>", "te <a> <b>", "leaf <a> <u> <v>" (graph ids
// 1-based as in the edge-list format), optional "root <a>". Middle sets are
// computed after reading; a decomposition without a root line is
// root-augmented.
branch_decomposition parse_decomposition(std::istream& in, const graph& g);
branch_decomposition parse_decomposition(const std::string& text, const graph& g);
std::string serialize_decomposition(const branch_decomposition& bd);

}  // namespace fpt
