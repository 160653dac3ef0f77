#include "fpt/color_coding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpt/errors.hpp"
#include "fpt/rng.hpp"

namespace fpt {

namespace {

std::uint32_t bit(int color) { return std::uint32_t{1} << (color - 1); }

void check_k(int k) {
  if (k < 1 || k > max_colors) {
    throw parameter_error("k=" + std::to_string(k) + " outside 1.." + std::to_string(max_colors));
  }
}

}  // namespace

color_set_table::color_set_table(const graph& g, const coloring& chi, int k, vertex s)
    : g_(g), chi_(chi), k_(k), s_(s) {
  const int n = g.vertex_count();
  table_.emplace_back(n);
  table_[0][s].push_back(bit(chi[s]));
  for (int i = 2; i <= k; ++i) {
    const auto& prev = table_.back();
    std::vector<std::vector<std::uint32_t>> cur(n);
    bool any = false;
    for (vertex v = 0; v < n; ++v) {
      const std::uint32_t mine = bit(chi[v]);
      auto& out = cur[v];
      for (vertex w : g.neighbors(v)) {
        for (std::uint32_t r : prev[w]) {
          if (!(r & mine)) out.push_back(r | mine);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      any |= !out.empty();
    }
    table_.push_back(std::move(cur));
    if (!any) break;
  }
}

std::span<const std::uint32_t> color_set_table::sets(int i, vertex v) const {
  if (i < 1 || i > k_) throw range_error("level " + std::to_string(i) + " outside 1.." + std::to_string(k_));
  if (v < 0 || v >= g_.vertex_count()) throw range_error("vertex " + std::to_string(v) + " out of range");
  if (i > levels()) return {};
  return table_[i - 1][v];
}

bool color_set_table::contains(int i, vertex v, std::uint32_t r) const {
  if (i < 1 || i > levels()) return false;
  const auto& sets = table_[i - 1][v];
  return std::binary_search(sets.begin(), sets.end(), r);
}

std::optional<std::vector<vertex>> color_set_table::path() const {
  if (levels() < k_) return std::nullopt;
  const auto& last = table_[k_ - 1];
  for (vertex v = 0; v < g_.vertex_count(); ++v) {
    if (last[v].empty()) continue;
    // Walk back: a predecessor w must hold R \ {chi(v)} one level down.
    std::vector<vertex> rev{v};
    std::uint32_t r = last[v].front();
    vertex cur = v;
    for (int i = k_; i > 1; --i) {
      r &= ~bit(chi_[cur]);
      for (vertex w : g_.neighbors(cur)) {
        if (contains(i - 1, w, r)) {
          cur = w;
          break;
        }
      }
      rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
  return std::nullopt;
}

path_result colorful_path_decide(const graph& g, const coloring& chi, int k) {
  check_k(k);
  if (static_cast<int>(chi.size()) != g.vertex_count()) throw contract_error("coloring is not total on V(G)");
  for (int c : chi) {
    if (c < 1 || c > k) throw contract_error("color " + std::to_string(c) + " outside 1.." + std::to_string(k));
  }
  for (vertex s = 0; s < g.vertex_count(); ++s) {
    color_set_table table(g, chi, k, s);
    if (auto p = table.path()) return {true, std::move(p)};
  }
  return {};
}

std::uint64_t trials_for_confidence(int k, double delta) {
  check_k(k);
  if (!(delta > 0.0 && delta < 1.0)) throw parameter_error("delta must lie in (0,1)");
  // k^k / k! as a product of k/i keeps the intermediate values small.
  long double inverse_success = 1.0L;
  for (int i = 1; i <= k; ++i) inverse_success *= static_cast<long double>(k) / i;
  const long double t = std::ceil(inverse_success * std::log(1.0L / static_cast<long double>(delta)));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(t));
}

coloring random_coloring(int n, int k, std::uint64_t seed, std::uint64_t index) {
  auto rng = splitmix64(seed).split(index);
  coloring chi(n);
  for (auto& c : chi) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
  return chi;
}

kpath_result k_path_randomized(const graph& g, int k, double delta, std::uint64_t seed) {
  kpath_result out;
  out.seed = seed;
  out.trials_planned = trials_for_confidence(k, delta);
  if (k > g.vertex_count()) return out;
  for (std::uint64_t t = 0; t < out.trials_planned; ++t) {
    const auto chi = random_coloring(g.vertex_count(), k, seed, t);
    ++out.trials_run;
    auto r = colorful_path_decide(g, chi, k);
    if (!r.yes) continue;
    const auto& p = *r.witness;
    std::vector<char> seen(g.vertex_count(), 0);
    bool ok = static_cast<int>(p.size()) == k;
    for (std::size_t i = 0; ok && i < p.size(); ++i) {
      ok = !seen[p[i]] && (i == 0 || g.adjacent(p[i - 1], p[i]));
      seen[p[i]] = 1;
    }
    if (!ok) throw contract_error("colorful path witness failed verification");
    out.yes = true;
    out.witness = r.witness;
    return out;
  }
  return out;
}

}  // namespace fpt
