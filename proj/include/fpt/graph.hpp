#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fpt {

using vertex = int;

struct edge {
  vertex u;
  vertex v;
  auto operator<=>(const edge&) const = default;
};

// Simple undirected graph over dense ids 0..n-1 with sorted adjacency lists.
// Immutable once built; shrinking goes through induced_subgraph().
class graph {
 public:
  graph() = default;
  explicit graph(int n);

  // Duplicated edges (in either orientation) are merged.
  // Throws range_error for ids outside 0..n-1 and validity_error for self-loops.
  static graph from_edges(int n, std::span<const edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const vertex> neighbors(vertex v) const { return adj_[v]; }
  int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const noexcept;
  bool adjacent(vertex u, vertex v) const;

  // Edges with u < v, in lexicographic order.
  std::vector<edge> edges() const;

  bool operator==(const graph&) const = default;

 private:
  std::vector<std::vector<vertex>> adj_;
  std::size_t m_ = 0;
};

// Checks symmetry, simplicity, sortedness and id ranges.
bool is_valid(const graph& g);

struct problem_instance {
  graph g;
  int k = 0;
};

struct triple {
  int a;
  int b;
  int c;
  auto operator<=>(const triple&) const = default;
};

// Triples over A x B x C, sorted and duplicate-free.
struct triple_system {
  int size_a = 0;
  int size_b = 0;
  int size_c = 0;
  std::vector<triple> triples;

  // Sorts, merges duplicates and range-checks.
  static triple_system make(int size_a, int size_b, int size_c, std::vector<triple> triples);
  bool operator==(const triple_system&) const = default;
};

struct induced {
  graph g;
  std::vector<vertex> new_id;  // old id -> new id, -1 when dropped
  std::vector<vertex> old_id;  // new id -> old id
};

// G[s]. New ids follow ascending old ids. Duplicates in s are ignored.
induced induced_subgraph(const graph& g, std::span<const vertex> s);

// Blocks sorted internally and ordered by smallest member.
std::vector<std::vector<vertex>> connected_components(const graph& g);

bool is_connected(const graph& g);

// Edge-list text: optional "#" comments, "p <n> <m>", then m lines "e <u> <v>"
// with 1-based ids.
graph parse_graph(std::istream& in);
graph parse_graph(const std::string& text);
std::string serialize_graph(const graph& g);

// Triple text: "t <|A|> <|B|> <|C|> <m>", then m lines "a b c" (0-based).
triple_system parse_triples(std::istream& in);
triple_system parse_triples(const std::string& text);
std::string serialize_triples(const triple_system& ts);

}  // namespace fpt
