#pragma once

#include <span>
#include <variant>
#include <vector>

#include "fpt/graph.hpp"

namespace fpt {

// Immediate answer produced by a kernelizer.
struct decided {
  bool answer = false;
};

// Reduced graph instance plus what is needed to lift a witness back.
struct reduced_graph {
  problem_instance instance;
  std::vector<vertex> original_id;  // reduced vertex -> original vertex
  std::vector<vertex> forced;       // original vertices added to every lifted witness

  std::vector<vertex> lift(std::span<const vertex> witness) const;
};

struct reduced_triples {
  triple_system system;
  int k = 0;
};

// Original instance is YES iff the decided answer is YES or the reduced
// instance is YES.
template <class Reduced>
using kernel_outcome = std::variant<decided, Reduced>;

using graph_kernel = kernel_outcome<reduced_graph>;
using triple_kernel = kernel_outcome<reduced_triples>;

// Half-integral optimum of the vertex cover LP: x_v = 0 on v0, 1/2 on half, 1 on v1.
struct nt_partition {
  std::vector<vertex> v0;
  std::vector<vertex> half;
  std::vector<vertex> v1;
};

// Minimum vertex cover of the bipartite double cover, read back as
// x_v = (covered copies of v) / 2.
nt_partition nt_half_integral(const graph& g);

// NO when |V1| > k or |V_half| > 2(k - |V1|); otherwise (G[V_half], k - |V1|)
// with V1 forced into every lifted cover.
graph_kernel nt_kernel_vc(const problem_instance& inst);

// Drops isolated vertices and splits each component by BFS parity. YES as
// soon as the larger side has >= k vertices, otherwise the reduced graph
// has at most 2k-2 vertices.
graph_kernel nonblocker_kernel(const problem_instance& inst);

struct maxleaf_counters {
  int r1 = 0;  // leaf next to a degree-2 vertex removed
  int r2 = 0;  // twin leaf removed, k decremented
  int r3 = 0;  // chain vertex contracted
  int cycle = 0;  // all-degree-2 graph shrunk to a triangle
};

// R1, R2, R3 to fixpoint, then YES if |V(G')| >= 8k'. Requires a connected,
// non-empty graph (domain_error otherwise).
graph_kernel maxleaf_kernel(const problem_instance& inst, maxleaf_counters* counters = nullptr);

// Greedy maximal matching, then truncation of every two-coordinate class to
// k triples and every one-coordinate class to 2(k-1)k+1 triples.
triple_kernel threedm_kernel(const triple_system& ts, int k);

// Size ceilings the kernelizers guarantee for Reduced outputs.
long long nt_bound(int k);
long long nonblocker_bound(int k);
long long maxleaf_bound(int k_reduced);  // strict: |V| < 8k'
long long threedm_bound(int k);

inline bool is_decided(const auto& outcome) { return std::holds_alternative<decided>(outcome); }

}  // namespace fpt
