#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satstar/random.hpp"
#include "satstar/vertex_set.hpp"

namespace satstar {

using Edge = std::pair<Vertex, Vertex>;

/// Thrown by parse() with the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list; duplicates (in either orientation) collapse.
  /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  static Graph empty(std::size_t n) { return Graph(n, {}); }
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  /// K_{1,leaves}; vertex 0 is the centre.
  static Graph star(std::size_t leaves);

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  const VertexSet& neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  std::size_t max_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(n_); }

  /// Same vertex set, only edges with both endpoints in `keep`.
  Graph induced_on(const VertexSet& keep) const;

  /// True iff every edge of `this` is an edge of `host` and the vertex counts match.
  bool is_spanning_subgraph_of(const Graph& host) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check_invariants() const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Validating constructor; see Graph(n, edges).
Graph make_graph(std::size_t n, const std::vector<Edge>& edges);

/// Binomial random graph. Pair (u, v), u < v, with lexicographic rank i is
/// present iff seed.uniform(i) < p. Throws std::invalid_argument if p is not in [0, 1].
Graph sample_gnp(std::size_t n, double p, const Seed& seed);

/// Number of edges of g with both endpoints in s. Throws std::out_of_range for foreign vertices.
std::size_t induced_edge_count(const Graph& g, const VertexSet& s);
std::size_t induced_edge_count(const Graph& g, const std::vector<Vertex>& s);

/// Edge-list text: "n m\n" followed by m lines "u v\n" with u < v in lexicographic order.
std::string serialize(const Graph& g);
Graph parse(std::string_view text);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace satstar
