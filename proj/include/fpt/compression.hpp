#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpt/graph.hpp"

namespace fpt {

// A hereditary graph property Pi together with a solver for its annotated
// deletion problem: given H, Q with H[Q] and H - Q in Pi, find R within Q,
// |R| <= budget, such that H - R is in Pi.
struct property_plugin {
  std::string name;
  std::function<bool(const graph&)> member;
  // Q is a sorted vertex list of H. Returns R (vertices of H) or nullopt.
  std::function<std::optional<std::vector<vertex>>(const graph& h, std::span<const vertex> q, int budget)> annotated;
};

// Pi = edgeless. The annotated answer is the set of vertices of Q with a
// neighbor in H, accepted when it fits the budget.
property_plugin edgeless_plugin();

// Throws contract_error unless H[Q] and H - Q both belong to the plugin's property.
void check_annotated_promises(const property_plugin& plugin, const graph& h, std::span<const vertex> q);

struct compression_stats {
  std::uint64_t insertions = 0;
  std::uint64_t compressions = 0;      // insertions that overflowed to k+1
  std::uint64_t subsets_examined = 0;  // total F subsets tried
  std::uint64_t max_subsets_per_step = 0;
  std::uint64_t annotated_calls = 0;
};

struct compression_result {
  bool yes = false;
  std::optional<std::vector<vertex>> witness;  // sorted deletion set
  compression_stats stats;
};

struct compression_options {
  // Re-check the annotated promises and the maintained solution after every
  // insertion.
  bool check_invariants = false;
};

// Iterative compression over the prefixes G[{0..i}]: keep a deletion set of
// size <= k, and on overflow try every F within S with G[F] in Pi, asking the
// plugin for R within Q = V - S with budget k - |S - F|.
compression_result solve_vdd(const graph& g, int k, const property_plugin& plugin,
                             compression_options options = {});

compression_result vc_by_compression(const problem_instance& inst, compression_options options = {});

}  // namespace fpt
