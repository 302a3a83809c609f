#include "satstar/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace satstar {

namespace {

void require_vertex(std::size_t n, Vertex v, const char* what) {
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                            " outside 0.." + std::to_string(n) + "-1");
}

}  // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n), adj_(n, VertexSet(n)) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("endpoint out of range in edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") for n = " + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
  }
  std::size_t degree_sum = 0;
  for (const auto& row : adj_) degree_sum += row.count();
  m_ = degree_sum / 2;
  check_invariants();
}

void Graph::check_invariants() const {
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    const auto& row = adj_[v];
    if (row.test(static_cast<Vertex>(v))) throw std::logic_error("graph invariant: self-loop");
    row.for_each([&](Vertex u) {
      if (!adj_[static_cast<std::size_t>(u)].test(static_cast<Vertex>(v)))
        throw std::logic_error("graph invariant: asymmetric adjacency");
    });
    degree_sum += row.count();
  }
  if (degree_sum != 2 * m_) throw std::logic_error("graph invariant: degree sum");
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; n >= 3 && v < n; ++v)
    e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  return Graph(n, e);
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  return Graph(n, e);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v <= leaves; ++v) e.emplace_back(0, static_cast<Vertex>(v));
  return Graph(leaves + 1, e);
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.count());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u)
    adj_[u].for_each([&](Vertex v) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    });
  return out;
}

Graph Graph::induced_on(const VertexSet& keep) const {
  std::vector<Edge> e;
  for (auto [u, v] : edges())
    if (keep.test(u) && keep.test(v)) e.emplace_back(u, v);
  return Graph(n_, e);
}

bool Graph::is_spanning_subgraph_of(const Graph& host) const {
  if (n_ != host.n_) return false;
  for (std::size_t v = 0; v < n_; ++v)
    if (!adj_[v].is_subset_of(host.adj_[v])) return false;
  return true;
}

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph sample_gnp(std::size_t n, double p, const Seed& seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p must lie in [0, 1]");
  std::vector<Edge> e;
  std::uint64_t rank = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++rank)
      if (seed.uniform(rank) < p) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, e);
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::out_of_range("induced_edge_count: vertex set universe differs from graph order");
  std::size_t twice = 0;
  s.for_each([&](Vertex v) { twice += g.neighbours(v).intersect_count(s); });
  return twice / 2;
}

std::size_t induced_edge_count(const Graph& g, const std::vector<Vertex>& s) {
  VertexSet set(g.order());
  for (Vertex v : s) {
    require_vertex(g.order(), v, "induced_edge_count");
    set.set(v);
  }
  return induced_edge_count(g, set);
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::vector<long long> split_integers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw ParseError(line_no, "malformed integer in \"" + std::string(line) + "\"");
    i = static_cast<std::size_t>(ptr - line.data());
    out.push_back(value);
  }
  return out;
}

}  // namespace

Graph parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");

  auto header = split_integers(lines[0], 1);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    throw ParseError(1, "header must be two non-negative integers \"n m\"");
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);

  std::vector<Edge> edges;
  edges.reserve(m);
  std::size_t line_no = 1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    line_no = i + 1;
    auto fields = split_integers(lines[i], line_no);
    if (fields.empty()) {
      if (i + 1 == lines.size() || edges.size() == m) continue;  // trailing blank line
      throw ParseError(line_no, "blank line inside edge list");
    }
    if (fields.size() != 2) throw ParseError(line_no, "edge line must have exactly two integers");
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared m = " + std::to_string(m));
    long long u = fields[0], v = fields[1];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ParseError(line_no, "endpoint out of range for n = " + std::to_string(n));
    if (u >= v) throw ParseError(line_no, "edge must satisfy u < v");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!edges.empty()) {
      if (e == edges.back()) throw ParseError(line_no, "duplicate edge");
      if (e < edges.back()) throw ParseError(line_no, "edges not in lexicographic order");
    }
    edges.push_back(e);
  }
  if (edges.size() != m)
    throw ParseError(line_no, "declared m = " + std::to_string(m) + " but found " + std::to_string(edges.size()) +
                                  " edges");
  return Graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file " + path);
  out << serialize(g);
}

}  // namespace satstar
