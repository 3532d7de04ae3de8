#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "recolor/error.hpp"

namespace recolor {

using Vertex = int;
using Colour = int;

/// Immutable simple undirected graph on vertices 0..n-1. Neighbour lists are
/// kept sorted so adjacency tests are logarithmic.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
      : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge " + std::to_string(u) + "-" + std::to_string(v));
      if (u == v)
        throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw Error(ErrorCode::DuplicateEdge, "repeated edge");
    }
    edge_count_ = static_cast<int>(edges.size());
    for (const auto& list : adj_)
      max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
  }

  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges)) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const noexcept { return max_degree_; }

  int min_degree() const {
    int d = max_degree_;
    for (const auto& list : adj_) d = std::min(d, static_cast<int>(list.size()));
    return adj_.empty() ? 0 : d;
  }

  bool is_regular() const { return min_degree() == max_degree_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
  int max_degree_ = 0;
};

/// Subgraph induced by `vertices` (in the given order); vertex i of the result
/// is `vertices[i]` of the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbours(vertices[i]))
      if (index[w] > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), index[w]);
  return {Graph(static_cast<int>(vertices.size()), edges),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

/// Maximal connected vertex sets, each sorted, ordered by least vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbours(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_complete(const Graph& g) {
  return g.max_degree() == g.order() - 1 && g.is_regular();
}

inline bool is_cycle(const Graph& g) {
  return g.order() >= 3 && g.is_regular() && g.max_degree() == 2 && is_connected(g);
}

/// Reads the "n m" edge-list format. Line numbers in errors are 1-based.
inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  auto read_pair = [&](const std::string& text, long long& a, long long& b) {
    std::istringstream ls(text);
    std::string rest;
    return static_cast<bool>(ls >> a >> b) && !(ls >> rest);
  };

  long long n = 0, m = 0;
  if (!next_line(line) || !read_pair(line, n, m) || n < 0 || m < 0)
    throw Error(ErrorCode::MalformedLine, "expected header \"n m\"", line_no == 0 ? 1 : line_no);

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line))
      throw Error(ErrorCode::MalformedLine,
                  "expected " + std::to_string(m) + " edges, found " + std::to_string(i),
                  line_no + 1);
    long long u = 0, v = 0;
    if (!read_pair(line, u, v))
      throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": \"" + line + "\"",
                  line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no), line_no);
    if (u == v) throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no), line_no);
    auto lo = static_cast<Vertex>(std::min(u, v));
    auto hi = static_cast<Vertex>(std::max(u, v));
    if (std::find(seen[lo].begin(), seen[lo].end(), hi) != seen[lo].end())
      throw Error(ErrorCode::DuplicateEdge, "line " + std::to_string(line_no), line_no);
    seen[lo].push_back(hi);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line(line))
    throw Error(ErrorCode::MalformedLine, "trailing content at line " + std::to_string(line_no),
                line_no);
  return Graph(static_cast<int>(n), edges);
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// Named graphs used throughout tests and the CLI.
namespace graphs {

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph star(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

/// K4 with edge {2,3} removed.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

/// 3-cube; vertex i and i^7 are diagonally opposite.
inline Graph cube() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) e.emplace_back(v, v ^ bit);
  return Graph(8, e);
}

inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

}  // namespace graphs

}  // namespace recolor
