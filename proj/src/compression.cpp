#include "fpt/compression.hpp"

#include <algorithm>

#include "fpt/errors.hpp"

namespace fpt {

property_plugin edgeless_plugin() {
  property_plugin p;
  p.name = "edgeless";
  p.member = [](const graph& h) { return h.edge_count() == 0; };
  p.annotated = [](const graph& h, std::span<const vertex> q, int budget) -> std::optional<std::vector<vertex>> {
    std::vector<vertex> r;
    for (vertex v : q) {
      if (h.degree(v) > 0) r.push_back(v);
    }
    if (static_cast<int>(r.size()) > budget) return std::nullopt;
    return r;
  };
  return p;
}

void check_annotated_promises(const property_plugin& plugin, const graph& h, std::span<const vertex> q) {
  std::vector<char> in_q(h.vertex_count(), 0);
  for (vertex v : q) in_q[v] = 1;
  std::vector<vertex> rest;
  for (vertex v = 0; v < h.vertex_count(); ++v) {
    if (!in_q[v]) rest.push_back(v);
  }
  if (!plugin.member(induced_subgraph(h, q).g)) throw contract_error("annotated promise broken: H[Q] not in " + plugin.name);
  if (!plugin.member(induced_subgraph(h, rest).g)) throw contract_error("annotated promise broken: H-Q not in " + plugin.name);
}

namespace {

std::vector<vertex> without(std::span<const vertex> all, const std::vector<char>& drop) {
  std::vector<vertex> out;
  for (vertex v : all) {
    if (!drop[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

compression_result solve_vdd(const graph& g, int k, const property_plugin& plugin, compression_options options) {
  compression_result out;
  auto& st = out.stats;
  if (k < 0) return out;
  const int n = g.vertex_count();
  if (k + 1 > 62) throw size_error("solve_vdd: k above 61 is not supported");

  std::vector<vertex> solution;  // for the current prefix
  std::vector<vertex> prefix;
  for (vertex v = 0; v < n; ++v) {
    prefix.push_back(v);
    ++st.insertions;
    std::vector<vertex> s = solution;
    s.push_back(v);
    if (static_cast<int>(s.size()) <= k) {
      solution = std::move(s);
    } else {
      ++st.compressions;
      std::vector<char> in_s(n, 0);
      for (vertex x : s) in_s[x] = 1;
      const auto q = without(prefix, in_s);
      std::uint64_t examined = 0;
      bool repaired = false;
      const std::uint64_t subsets = std::uint64_t{1} << s.size();
      for (std::uint64_t mask = 0; mask < subsets && !repaired; ++mask) {
        std::vector<vertex> f, s_minus_f;
        for (std::size_t i = 0; i < s.size(); ++i) ((mask >> i) & 1 ? f : s_minus_f).push_back(s[i]);
        const int budget = k - static_cast<int>(s_minus_f.size());
        if (budget < 0) continue;
        ++examined;
        if (!plugin.member(induced_subgraph(g, f).g)) continue;
        std::vector<vertex> hv = f;
        hv.insert(hv.end(), q.begin(), q.end());
        auto h = induced_subgraph(g, hv);
        std::vector<vertex> q_local;
        for (vertex x : q) q_local.push_back(h.new_id[x]);
        std::sort(q_local.begin(), q_local.end());
        if (options.check_invariants) check_annotated_promises(plugin, h.g, q_local);
        ++st.annotated_calls;
        auto r = plugin.annotated(h.g, q_local, budget);
        if (!r) continue;
        if (static_cast<int>(r->size()) > budget) throw contract_error("annotated solver exceeded its budget");
        std::vector<vertex> next = s_minus_f;
        for (vertex x : *r) {
          if (!std::binary_search(q_local.begin(), q_local.end(), x)) {
            throw contract_error("annotated solver returned a vertex outside Q");
          }
          next.push_back(h.old_id[x]);
        }
        // The combined set is checked against the property, not trusted.
        std::vector<char> in_next(n, 0);
        for (vertex x : next) in_next[x] = 1;
        if (!plugin.member(induced_subgraph(g, without(prefix, in_next)).g)) {
          throw contract_error("repaired solution is not a valid deletion set");
        }
        solution = std::move(next);
        repaired = true;
      }
      st.subsets_examined += examined;
      st.max_subsets_per_step = std::max(st.max_subsets_per_step, examined);
      if (!repaired) return out;
    }
    if (options.check_invariants) {
      std::vector<char> in_sol(n, 0);
      for (vertex x : solution) in_sol[x] = 1;
      if (!plugin.member(induced_subgraph(g, without(prefix, in_sol)).g)) {
        throw contract_error("maintained solution invalid for prefix " + std::to_string(v));
      }
    }
  }
  out.yes = true;
  std::sort(solution.begin(), solution.end());
  out.witness = std::move(solution);
  return out;
}

compression_result vc_by_compression(const problem_instance& inst, compression_options options) {
  return solve_vdd(inst.g, inst.k, edgeless_plugin(), options);
}

}  // namespace fpt
