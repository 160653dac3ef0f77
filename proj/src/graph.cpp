#include "fpt/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "fpt/errors.hpp"

namespace fpt {

graph::graph(int n) : adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
  if (n < 0) throw parameter_error("negative vertex count");
}

graph graph::from_edges(int n, std::span<const edge> edges) {
  graph g(n);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw range_error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw validity_error("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.m_ = twice / 2;
  return g;
}

int graph::max_degree() const noexcept {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

bool graph::adjacent(vertex u, vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<edge> graph::edges() const {
  std::vector<edge> out;
  out.reserve(m_);
  for (vertex u = 0; u < vertex_count(); ++u) {
    for (vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool is_valid(const graph& g) {
  const int n = g.vertex_count();
  std::size_t twice = 0;
  for (vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    twice += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      vertex u = nb[i];
      if (u < 0 || u >= n || u == v) return false;
      if (i > 0 && nb[i - 1] >= u) return false;
      auto back = g.neighbors(u);
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  }
  return twice == 2 * g.edge_count();
}

triple_system triple_system::make(int size_a, int size_b, int size_c, std::vector<triple> triples) {
  if (size_a < 0 || size_b < 0 || size_c < 0) throw parameter_error("negative universe size");
  for (const auto& t : triples) {
    if (t.a < 0 || t.a >= size_a || t.b < 0 || t.b >= size_b || t.c < 0 || t.c >= size_c) {
      throw range_error("triple (" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                        std::to_string(t.c) + ") out of range");
    }
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  return {size_a, size_b, size_c, std::move(triples)};
}

induced induced_subgraph(const graph& g, std::span<const vertex> s) {
  const int n = g.vertex_count();
  induced out;
  out.new_id.assign(n, -1);
  std::vector<char> keep(n, 0);
  for (vertex v : s) {
    if (v < 0 || v >= n) throw range_error("vertex " + std::to_string(v) + " out of range");
    keep[v] = 1;
  }
  for (vertex v = 0; v < n; ++v) {
    if (keep[v]) {
      out.new_id[v] = static_cast<vertex>(out.old_id.size());
      out.old_id.push_back(v);
    }
  }
  std::vector<edge> es;
  for (vertex u : out.old_id) {
    for (vertex v : g.neighbors(u)) {
      if (u < v && keep[v]) es.push_back({out.new_id[u], out.new_id[v]});
    }
  }
  out.g = graph::from_edges(static_cast<int>(out.old_id.size()), es);
  return out;
}

std::vector<std::vector<vertex>> connected_components(const graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<vertex>> blocks;
  std::vector<vertex> stack;
  for (vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    std::vector<vertex> block;
    seen[r] = 1;
    stack.push_back(r);
    while (!stack.empty()) {
      vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_connected(const graph& g) { return connected_components(g).size() <= 1; }

namespace {

// Reads the next non-blank, non-comment line. Returns false at EOF.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

template <class... Ts>
bool read_fields(const std::string& line, const std::string& tag, Ts&... out) {
  std::istringstream ss(line);
  std::string head;
  if (!(ss >> head) || head != tag) return false;
  if (!((ss >> out) && ...)) return false;
  std::string rest;
  return !(ss >> rest);
}

template <class... Ts>
bool read_untagged(const std::string& line, Ts&... out) {
  std::istringstream ss(line);
  if (!((ss >> out) && ...)) return false;
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw parse_error(lineno, "missing header \"p <n> <m>\"");
  long long n = 0, m = 0;
  if (!read_fields(line, "p", n, m) || n < 0 || m < 0) {
    throw parse_error(lineno, "malformed header, expected \"p <n> <m>\"");
  }
  std::vector<edge> es;
  es.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) {
      throw parse_error(lineno, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    }
    long long u = 0, v = 0;
    if (!read_fields(line, "e", u, v)) throw parse_error(lineno, "malformed edge line, expected \"e <u> <v>\"");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw range_error("line " + std::to_string(lineno) + ": vertex id out of range 1.." + std::to_string(n));
    }
    if (u == v) throw validity_error("line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(u));
    es.push_back({static_cast<vertex>(u - 1), static_cast<vertex>(v - 1)});
  }
  if (next_line(in, line, lineno)) throw parse_error(lineno, "trailing content after the declared edges");
  return graph::from_edges(static_cast<int>(n), es);
}

graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

triple_system parse_triples(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw parse_error(lineno, "missing header \"t <A> <B> <C> <m>\"");
  long long a = 0, b = 0, c = 0, m = 0;
  if (!read_fields(line, "t", a, b, c, m) || a < 0 || b < 0 || c < 0 || m < 0) {
    throw parse_error(lineno, "malformed header, expected \"t <A> <B> <C> <m>\"");
  }
  std::vector<triple> ts;
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) throw parse_error(lineno, "missing triple line");
    long long x = 0, y = 0, z = 0;
    if (!read_untagged(line, x, y, z)) throw parse_error(lineno, "malformed triple, expected \"a b c\"");
    if (x < 0 || x >= a || y < 0 || y >= b || z < 0 || z >= c) {
      throw range_error("line " + std::to_string(lineno) + ": triple index out of range");
    }
    ts.push_back({static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});
  }
  if (next_line(in, line, lineno)) throw parse_error(lineno, "trailing content after the declared triples");
  return triple_system::make(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), std::move(ts));
}

triple_system parse_triples(const std::string& text) {
  std::istringstream in(text);
  return parse_triples(in);
}

std::string serialize_triples(const triple_system& ts) {
  std::ostringstream out;
  out << "t " << ts.size_a << ' ' << ts.size_b << ' ' << ts.size_c << ' ' << ts.triples.size() << '\n';
  for (const auto& t : ts.triples) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
  return out.str();
}

}  // namespace fpt
