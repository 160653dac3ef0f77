#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpt/graph.hpp"

namespace fpt {

// chi: V(G) -> {1..k}, stored by vertex id.
using coloring = std::vector<int>;

inline constexpr int max_colors = 32;

struct path_result {
  bool yes = false;
  std::optional<std::vector<vertex>> witness;  // vertices in path order
};

// C_s(i, v) for one start vertex s: the color sets (k-bit masks) of colorful
// i-vertex paths from s to v. Exposed for inspection and tests.
class color_set_table {
 public:
  color_set_table(const graph& g, const coloring& chi, int k, vertex s);

  int k() const noexcept { return k_; }
  vertex start() const noexcept { return s_; }
  // Sorted, duplicate-free masks; bit c-1 stands for color c.
  // Levels past levels() are empty. Throws range_error for i outside 1..k or
  // v outside V(G).
  std::span<const std::uint32_t> sets(int i, vertex v) const;
  bool contains(int i, vertex v, std::uint32_t r) const;
  // Deepest level that was filled (stops early once a level is empty).
  int levels() const noexcept { return static_cast<int>(table_.size()); }

  // A colorful k-path from s, if any.
  std::optional<std::vector<vertex>> path() const;

 private:
  const graph& g_;
  const coloring& chi_;
  int k_;
  vertex s_;
  std::vector<std::vector<std::vector<std::uint32_t>>> table_;
};

// Colorful k-path by running the table from every start vertex, stopping at
// the first success. Throws contract_error when chi has the wrong size or a
// color outside 1..k, parameter_error when k is outside 1..32.
path_result colorful_path_decide(const graph& g, const coloring& chi, int k);

// ceil((k^k / k!) * ln(1/delta)), at least 1. Throws parameter_error unless
// 0 < delta < 1 and k >= 1.
std::uint64_t trials_for_confidence(int k, double delta);

struct kpath_result {
  bool yes = false;
  std::optional<std::vector<vertex>> witness;
  std::uint64_t trials_planned = 0;
  std::uint64_t trials_run = 0;
  std::uint64_t seed = 0;
};

// Coloring used in trial `index`: a function of (seed, index) only.
coloring random_coloring(int n, int k, std::uint64_t seed, std::uint64_t index);

// Monte Carlo k-Path: YES answers carry a verified path; on a YES instance the
// answer is NO with probability at most delta.
kpath_result k_path_randomized(const graph& g, int k, double delta, std::uint64_t seed);

}  // namespace fpt
