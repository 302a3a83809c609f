#include "satstar/saturation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "satstar/theory.hpp"

namespace satstar {

std::string to_string(SatMethod m) {
  switch (m) {
    case SatMethod::oracle: return "oracle";
    case SatMethod::structured: return "structured";
    case SatMethod::generic: return "generic";
    case SatMethod::constructed: return "constructed";
  }
  return "unknown";
}

SaturationCheck is_star_saturated(const Graph& G, const Graph& H, int r) {
  if (!H.is_spanning_subgraph_of(G))
    throw std::invalid_argument("is_star_saturated: H is not a spanning subgraph of G");
  if (r < 1) throw std::invalid_argument("is_star_saturated: r must be positive");
  SaturationCheck out;
  const auto full = static_cast<std::size_t>(r - 1);
  for (std::size_t v = 0; v < H.order(); ++v) {
    if (H.degree(static_cast<Vertex>(v)) > full) {
      out.ok = false;
      out.vertex = static_cast<Vertex>(v);
      out.violation = "vertex " + std::to_string(v) + " has H-degree " +
                      std::to_string(H.degree(static_cast<Vertex>(v))) + " >= r, so H contains K_{1," +
                      std::to_string(r) + "}";
      return out;
    }
  }
  for (auto [u, v] : G.edges()) {
    if (H.adjacent(u, v)) continue;
    if (H.degree(u) != full && H.degree(v) != full) {
      out.ok = false;
      out.edge = Edge{u, v};
      out.violation = "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") can be added: endpoint H-degrees " + std::to_string(H.degree(u)) + " and " +
                      std::to_string(H.degree(v)) + " are below r-1";
      return out;
    }
  }
  return out;
}

SaturatedSubgraph classify(const Graph& H, int r) {
  SaturatedSubgraph s;
  const std::size_t n = H.order();
  s.V1 = VertexSet(n);
  s.V2 = VertexSet(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (H.degree(static_cast<Vertex>(v)) == static_cast<std::size_t>(r - 1))
      s.V2.set(static_cast<Vertex>(v));
    else
      s.V1.set(static_cast<Vertex>(v));
  }
  for (auto [u, v] : H.edges()) {
    const bool a = s.V1.test(u), b = s.V1.test(v);
    if (a && b) ++s.v1_edges;
    if (a != b) ++s.cross_edges;
  }
  s.edge_count = H.size();
  s.H = H;
  return s;
}

// ---------------------------------------------------------------------------
// Edge-branching oracle for K_{1,r}.

namespace {

class StarOracle {
 public:
  StarOracle(const Graph& g, int r) : g_(g), full_(r - 1), edges_(g.edges()) {
    const std::size_t n = g.order();
    deg_.assign(n, 0);
    undecided_.assign(n, 0);
    excluded_at_.assign(n, {});
    for (auto [u, v] : edges_) {
      ++undecided_[static_cast<std::size_t>(u)];
      ++undecided_[static_cast<std::size_t>(v)];
    }
    state_.assign(edges_.size(), 0);
  }

  SatResult solve() {
    // Greedy maximal K_{1,r}-free subgraph is saturated; it seeds the incumbent.
    std::vector<int> deg(g_.order(), 0);
    best_state_.assign(edges_.size(), 0);
    best_ = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = edges_[i];
      if (deg[static_cast<std::size_t>(u)] < full_ && deg[static_cast<std::size_t>(v)] < full_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        best_state_[i] = 1;
        ++best_;
      }
    }
    branch(0);

    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (best_state_[i] == 1) kept.push_back(edges_[i]);
    SatResult out;
    out.witness = classify(Graph(g_.order(), kept), full_ + 1);
    out.value = out.witness.edge_count;
    out.method = SatMethod::oracle;
    out.proven = true;
    return out;
  }

 private:
  bool can_fill(Vertex x) const {
    const auto i = static_cast<std::size_t>(x);
    return deg_[i] + undecided_[i] >= full_;
  }

  bool excluded_ok_around(Vertex x) const {
    if (can_fill(x)) return true;
    for (Vertex y : excluded_at_[static_cast<std::size_t>(x)])
      if (!can_fill(y)) return false;
    return true;
  }

  // Vertices that must end up full because an excluded neighbour cannot.
  std::size_t lower_bound() const {
    std::size_t need = 0;
    for (std::size_t x = 0; x < deg_.size(); ++x) {
      if (deg_[x] >= full_) continue;
      for (Vertex y : excluded_at_[x])
        if (!can_fill(y)) {
          need += static_cast<std::size_t>(full_ - deg_[x]);
          break;
        }
    }
    return (need + 1) / 2;
  }

  void branch(std::size_t i) {
    if (current_ + lower_bound() >= best_) return;
    if (i == edges_.size()) {
      for (std::size_t x = 0; x < deg_.size(); ++x)
        for (Vertex y : excluded_at_[x])
          if (deg_[x] != full_ && deg_[static_cast<std::size_t>(y)] != full_) return;
      best_ = current_;
      best_state_ = state_;
      return;
    }
    auto [u, v] = edges_[i];
    const auto ui = static_cast<std::size_t>(u), vi = static_cast<std::size_t>(v);
    --undecided_[ui];
    --undecided_[vi];

    // exclude
    state_[i] = 2;
    excluded_at_[ui].push_back(v);
    excluded_at_[vi].push_back(u);
    if ((can_fill(u) || can_fill(v)) && excluded_ok_around(u) && excluded_ok_around(v)) branch(i + 1);
    excluded_at_[ui].pop_back();
    excluded_at_[vi].pop_back();

    // include
    if (deg_[ui] < full_ && deg_[vi] < full_) {
      state_[i] = 1;
      ++deg_[ui];
      ++deg_[vi];
      ++current_;
      branch(i + 1);
      --current_;
      --deg_[ui];
      --deg_[vi];
    }
    state_[i] = 0;
    ++undecided_[ui];
    ++undecided_[vi];
  }

  const Graph& g_;
  int full_;
  std::vector<Edge> edges_;
  std::vector<int> deg_;
  std::vector<int> undecided_;
  std::vector<std::vector<Vertex>> excluded_at_;
  std::vector<char> state_;
  std::vector<char> best_state_;
  std::size_t current_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

SatResult sat_exact_oracle(const Graph& G, int r) {
  if (G.order() > kOracleMaxOrder)
    throw std::invalid_argument("sat_exact_oracle: n exceeds the cap of " + std::to_string(kOracleMaxOrder));
  if (r < 1) throw std::invalid_argument("sat_exact_oracle: r must be positive");
  return StarOracle(G, r).solve();
}

// ---------------------------------------------------------------------------
// Degree-constrained completion.

namespace {

class CompletionSearch {
 public:
  CompletionSearch(const Graph& g, const VertexSet& v1, int r) : g_(g), v1_(v1), n_(g.order()) {
    demand_.assign(n_, 0);
    capacity_.assign(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      const auto x = static_cast<Vertex>(v);
      if (v1.test(x))
        capacity_[v] = r - 2 - static_cast<int>(g.neighbours(x).intersect_count(v1));
      else
        demand_[v] = r - 1;
    }
  }

  int capacity_total() const {
    int total = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (v1_.test(static_cast<Vertex>(v))) total += capacity_[v];
    return total;
  }

  bool feasible(int cross) {
    cross_left_ = cross;
    chosen_.clear();
    return search();
  }

  const std::vector<Edge>& chosen() const { return result_; }

 private:
  bool open_v2(Vertex w) const {
    const auto i = static_cast<std::size_t>(w);
    return !v1_.test(w) && demand_[i] > 0;
  }
  bool open_v1(Vertex u) const { return v1_.test(u) && capacity_[static_cast<std::size_t>(u)] > 0; }

  int v2_options(Vertex w) const {
    int c = 0;
    g_.neighbours(w).for_each([&](Vertex x) {
      if (open_v2(x)) ++c;
    });
    return c;
  }
  int v1_options(Vertex w) const {
    int c = 0;
    g_.neighbours(w).for_each([&](Vertex x) {
      if (open_v1(x)) ++c;
    });
    return c;
  }

  bool prune() const {
    int demand_sum = 0, cross_reach = 0;
    for (std::size_t w = 0; w < n_; ++w) {
      const auto x = static_cast<Vertex>(w);
      if (!open_v2(x)) continue;
      const int cross_opts = std::min(cross_left_, v1_options(x));
      if (v2_options(x) + cross_opts < demand_[w]) return true;
      demand_sum += demand_[w];
      cross_reach += std::min(demand_[w], cross_opts);
    }
    if (demand_sum < cross_left_ || (demand_sum - cross_left_) % 2 != 0) return true;
    if (cross_reach < cross_left_) return true;

    // Each component of open V2 vertices with odd demand needs an odd number of cross edges.
    std::vector<char> seen(n_, 0);
    int odd_components = 0;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n_; ++s) {
      if (seen[s] || !open_v2(static_cast<Vertex>(s))) continue;
      int sum = 0;
      bool cross_access = false;
      stack.assign(1, static_cast<Vertex>(s));
      seen[s] = 1;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        sum += demand_[static_cast<std::size_t>(x)];
        if (v1_options(x) > 0) cross_access = true;
        g_.neighbours(x).for_each([&](Vertex y) {
          if (!seen[static_cast<std::size_t>(y)] && open_v2(y)) {
            seen[static_cast<std::size_t>(y)] = 1;
            stack.push_back(y);
          }
        });
      }
      if (sum % 2 != 0) {
        if (!cross_access) return true;
        ++odd_components;
      }
    }
    return odd_components > cross_left_;
  }

  bool search() {
    Vertex pick = -1;
    int pick_slack = std::numeric_limits<int>::max();
    for (std::size_t w = 0; w < n_; ++w) {
      const auto x = static_cast<Vertex>(w);
      if (!open_v2(x)) continue;
      const int slack = v2_options(x) + std::min(cross_left_, v1_options(x)) - demand_[w];
      if (slack < pick_slack) {
        pick_slack = slack;
        pick = x;
      }
    }
    if (pick < 0) {
      if (cross_left_ != 0) return false;
      result_ = chosen_;
      return true;
    }
    if (prune()) return false;

    std::vector<Vertex> options;
    g_.neighbours(pick).for_each([&](Vertex x) {
      if (open_v2(x)) options.push_back(x);
    });
    const std::size_t internal = options.size();
    if (cross_left_ > 0)
      g_.neighbours(pick).for_each([&](Vertex x) {
        if (open_v1(x)) options.push_back(x);
      });
    const int need = demand_[static_cast<std::size_t>(pick)];
    demand_[static_cast<std::size_t>(pick)] = 0;
    std::vector<Vertex> taken;
    const bool ok = choose(pick, options, internal, 0, need, taken);
    demand_[static_cast<std::size_t>(pick)] = need;
    return ok;
  }

  // Picks `need` more options from index `from` on, then recurses.
  bool choose(Vertex centre, const std::vector<Vertex>& options, std::size_t internal, std::size_t from, int need,
              std::vector<Vertex>& taken) {
    if (need == 0) {
      for (Vertex x : taken) {
        chosen_.emplace_back(std::min(centre, x), std::max(centre, x));
        if (v1_.test(x)) {
          --capacity_[static_cast<std::size_t>(x)];
          --cross_left_;
        } else {
          --demand_[static_cast<std::size_t>(x)];
        }
      }
      const bool ok = search();
      for (Vertex x : taken) {
        chosen_.pop_back();
        if (v1_.test(x)) {
          ++capacity_[static_cast<std::size_t>(x)];
          ++cross_left_;
        } else {
          ++demand_[static_cast<std::size_t>(x)];
        }
      }
      return ok;
    }
    int cross_taken = 0;
    for (Vertex x : taken)
      if (v1_.test(x)) ++cross_taken;
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= options.size(); ++i) {
      if (i >= internal && cross_taken >= cross_left_) break;
      taken.push_back(options[i]);
      if (choose(centre, options, internal, i + 1, need - 1, taken)) return true;
      taken.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const VertexSet& v1_;
  std::size_t n_;
  std::vector<int> demand_;
  std::vector<int> capacity_;
  int cross_left_ = 0;
  std::vector<Edge> chosen_;
  std::vector<Edge> result_;
};

}  // namespace

std::optional<Completion> min_completion(const Graph& G, const VertexSet& V1, int r) {
  if (r < 2) throw std::invalid_argument("min_completion: r must be at least 2");
  if (V1.universe() != G.order()) throw std::invalid_argument("min_completion: V1 universe mismatch");
  const std::size_t n = G.order();
  for (std::size_t v = 0; v < n; ++v) {
    const auto x = static_cast<Vertex>(v);
    if (V1.test(x) && G.neighbours(x).intersect_count(V1) > static_cast<std::size_t>(r - 2))
      throw std::invalid_argument("min_completion: vertex " + std::to_string(v) + " has G[V1]-degree above r-2");
  }
  const std::size_t v2_size = n - V1.count();
  CompletionSearch search(G, V1, r);
  const int cap = search.capacity_total();
  const int start = static_cast<int>((static_cast<std::size_t>(r - 1) * v2_size) % 2);
  for (int c = start; c <= cap; c += 2) {
    if (!search.feasible(c)) continue;
    std::vector<Edge> edges = G.induced_on(V1).edges();
    edges.insert(edges.end(), search.chosen().begin(), search.chosen().end());
    return Completion{static_cast<std::size_t>(c), Graph(n, edges)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structured solver.

namespace {

class StructuredSolver {
 public:
  StructuredSolver(const Graph& g, int r) : g_(g), r_(r), n_(g.order()) {}

  SatResult solve() {
    // Every candidate V1 costs at least its level m(V1) + ceil((r-1)(n-|V1|)/2); levels
    // are scanned upwards and the scan stops once the incumbent is no worse than the level.
    const long long ceiling = static_cast<long long>(g_.size()) + static_cast<long long>(r_) * static_cast<long long>(n_);
    for (long long level = 0; level <= ceiling; ++level) {
      if (best_ && static_cast<long long>(best_->value) <= level) break;
      level_ = level;
      VertexSet chosen(n_);
      std::vector<int> inner_degree(n_, 0);
      done_ = false;
      enumerate(0, chosen, inner_degree, 0, 0);
    }
    if (!best_) throw std::logic_error("sat_exact_structured: no saturated subgraph found");
    return *best_;
  }

 private:
  long long bound(std::size_t k, std::size_t m) const {
    return static_cast<long long>(m) + ceil_half(static_cast<long long>(r_ - 1) * static_cast<long long>(n_ - k));
  }

  void consider(const VertexSet& v1, std::size_t k, std::size_t m) {
    auto completion = min_completion(g_, v1, r_);
    if (!completion) return;
    const std::size_t total =
        m + (static_cast<std::size_t>(r_ - 1) * (n_ - k) + completion->cross_edges) / 2;
    if (best_ && best_->value <= total) return;
    SatResult res;
    res.witness = classify(completion->H, r_);
    res.value = res.witness.edge_count;
    if (res.value != total) throw std::logic_error("sat_exact_structured: edge-count identity violated");
    res.method = SatMethod::structured;
    res.proven = true;
    best_ = std::move(res);
    if (static_cast<long long>(total) == level_) done_ = true;
  }

  // Enumerates V1 with max G[V1]-degree <= r-2 and bound exactly level_.
  void enumerate(std::size_t next, VertexSet& chosen, std::vector<int>& inner_degree, std::size_t k, std::size_t m) {
    if (done_) return;
    // Adding vertices raises m and lowers the ceiling term; the best case adds all the rest with no edges.
    if (bound(k + (n_ - next), m) > level_) return;
    if (next == n_) {
      if (bound(k, m) == level_) consider(chosen, k, m);
      return;
    }
    const auto v = static_cast<Vertex>(next);
    // include v
    const auto& row = g_.neighbours(v);
    const int d = static_cast<int>(row.intersect_count(chosen));
    bool fits = d <= r_ - 2;
    if (fits)
      chosen.for_each([&](Vertex u) {
        if (row.test(u) && inner_degree[static_cast<std::size_t>(u)] + 1 > r_ - 2) fits = false;
      });
    if (fits) {
      chosen.set(v);
      inner_degree[next] = d;
      chosen.for_each([&](Vertex u) {
        if (row.test(u)) ++inner_degree[static_cast<std::size_t>(u)];
      });
      enumerate(next + 1, chosen, inner_degree, k + 1, m + static_cast<std::size_t>(d));
      chosen.for_each([&](Vertex u) {
        if (row.test(u)) --inner_degree[static_cast<std::size_t>(u)];
      });
      chosen.reset(v);
      inner_degree[next] = 0;
    }
    // exclude v
    enumerate(next + 1, chosen, inner_degree, k, m);
  }

  const Graph& g_;
  int r_;
  std::size_t n_;
  long long level_ = 0;
  bool done_ = false;
  std::optional<SatResult> best_;
};

}  // namespace

SatResult sat_exact_structured(const Graph& G, int r) {
  if (r < 2) throw std::invalid_argument("sat_exact_structured: r must be at least 2");
  return StructuredSolver(G, r).solve();
}

// ---------------------------------------------------------------------------
// Generic tiny-instance oracle.

namespace {

struct Pattern {
  std::size_t order = 0;
  std::vector<Vertex> sequence;               // placement order of pattern vertices
  std::vector<std::vector<std::size_t>> back; // earlier positions adjacent to position i
  std::vector<Edge> edges;                    // pattern edges as position pairs
};

// Placement order greedily maximises back-adjacency; `first` pins an edge to positions 0 and 1.
Pattern compile(const Graph& f, std::optional<Edge> first = std::nullopt) {
  Pattern p;
  p.order = f.order();
  std::vector<bool> placed(f.order(), false);
  std::vector<std::size_t> pos(f.order(), 0);
  for (std::size_t step = 0; step < f.order(); ++step) {
    if (first && step < 2) {
      const Vertex v = step == 0 ? first->first : first->second;
      placed[static_cast<std::size_t>(v)] = true;
      pos[static_cast<std::size_t>(v)] = step;
      p.sequence.push_back(v);
      continue;
    }
    Vertex pick = -1;
    std::size_t pick_back = 0, pick_deg = 0;
    for (std::size_t v = 0; v < f.order(); ++v) {
      if (placed[v]) continue;
      std::size_t b = 0;
      f.neighbours(static_cast<Vertex>(v)).for_each([&](Vertex u) {
        if (placed[static_cast<std::size_t>(u)]) ++b;
      });
      const std::size_t d = f.degree(static_cast<Vertex>(v));
      if (pick < 0 || b > pick_back || (b == pick_back && d > pick_deg)) {
        pick = static_cast<Vertex>(v);
        pick_back = b;
        pick_deg = d;
      }
    }
    placed[static_cast<std::size_t>(pick)] = true;
    pos[static_cast<std::size_t>(pick)] = step;
    p.sequence.push_back(pick);
  }
  p.back.assign(f.order(), {});
  for (auto [a, b] : f.edges()) {
    std::size_t pa = pos[static_cast<std::size_t>(a)], pb = pos[static_cast<std::size_t>(b)];
    if (pa > pb) std::swap(pa, pb);
    p.back[pb].push_back(pa);
    p.edges.emplace_back(static_cast<Vertex>(pa), static_cast<Vertex>(pb));
  }
  return p;
}

bool embed(const std::vector<VertexSet>& rows, const Pattern& p, std::size_t i, std::vector<Vertex>& image,
           VertexSet& used) {
  if (i == p.order) return true;
  VertexSet cand = used.complement();
  for (std::size_t j : p.back[i]) cand &= rows[static_cast<std::size_t>(image[j])];
  bool found = false;
  cand.for_each([&](Vertex c) {
    if (found) return;
    image[i] = c;
    used.set(c);
    if (embed(rows, p, i + 1, image, used))
      found = true;
    else
      used.reset(c);
  });
  return found;
}

// Host edges of one copy of the pattern, or nullopt.
std::optional<std::vector<Edge>> find_copy(const std::vector<VertexSet>& rows, const Pattern& p) {
  if (p.order > rows.size()) return std::nullopt;
  std::vector<Vertex> image(p.order, -1);
  VertexSet used(rows.size());
  if (!embed(rows, p, 0, image, used)) return std::nullopt;
  std::vector<Edge> out;
  for (auto [a, b] : p.edges) {
    Vertex x = image[static_cast<std::size_t>(a)], y = image[static_cast<std::size_t>(b)];
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  return out;
}

// One copy of the pattern using host edge (u, v), tried against every pinned pattern edge.
std::optional<std::vector<Edge>> find_copy_through(const std::vector<VertexSet>& rows,
                                                   const std::vector<Pattern>& pinned, Vertex u, Vertex v) {
  for (const Pattern& p : pinned) {
    if (p.order > rows.size()) return std::nullopt;
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<Vertex> image(p.order, -1);
      image[0] = flip ? v : u;
      image[1] = flip ? u : v;
      VertexSet used(rows.size());
      used.set(u);
      used.set(v);
      if (!embed(rows, p, 2, image, used)) continue;
      std::vector<Edge> out;
      for (auto [a, b] : p.edges) {
        Vertex x = image[static_cast<std::size_t>(a)], y = image[static_cast<std::size_t>(b)];
        out.emplace_back(std::min(x, y), std::max(x, y));
      }
      return out;
    }
  }
  return std::nullopt;
}

class GenericOracle {
 public:
  GenericOracle(const Graph& g, const Graph& f) : g_(g), edges_(g.edges()) {
    for (const Edge& e : f.edges()) pinned_.push_back(compile(f, e));
    const std::size_t n = g.order();
    id_.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = edges_[i];
      id_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<int>(i);
      id_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = static_cast<int>(i);
    }
    h_.assign(n, VertexSet(n));
    upper_.assign(n, VertexSet(n));
    for (auto [u, v] : edges_) link(upper_, u, v);
    witness_.assign(edges_.size(), {});
    state_.assign(edges_.size(), 0);
  }

  SatResult solve() {
    // Greedy maximal F-free subgraph seeds the incumbent.
    std::vector<VertexSet> greedy(g_.order(), VertexSet(g_.order()));
    best_state_.assign(edges_.size(), 0);
    best_ = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = edges_[i];
      link(greedy, u, v);
      if (find_copy_through(greedy, pinned_, u, v)) {
        unlink(greedy, u, v);
      } else {
        best_state_[i] = 1;
        ++best_;
      }
    }
    branch(0);
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (best_state_[i] == 1) kept.push_back(edges_[i]);
    SatResult out;
    Graph h(g_.order(), kept);
    out.witness.H = h;
    out.witness.edge_count = h.size();
    out.witness.V1 = VertexSet(g_.order());
    out.witness.V2 = VertexSet(g_.order());
    out.value = h.size();
    out.method = SatMethod::generic;
    out.proven = true;
    return out;
  }

 private:
  static void link(std::vector<VertexSet>& rows, Vertex u, Vertex v) {
    rows[static_cast<std::size_t>(u)].set(v);
    rows[static_cast<std::size_t>(v)].set(u);
  }
  static void unlink(std::vector<VertexSet>& rows, Vertex u, Vertex v) {
    rows[static_cast<std::size_t>(u)].reset(v);
    rows[static_cast<std::size_t>(v)].reset(u);
  }

  // Excluded edge x stays completable iff (upper closure + x) still has a copy of F through x.
  bool refresh_witness(std::size_t x) {
    auto [u, v] = edges_[x];
    link(upper_, u, v);
    auto copy = find_copy_through(upper_, pinned_, u, v);
    unlink(upper_, u, v);
    if (!copy) return false;
    witness_[x].clear();
    for (auto [a, b] : *copy) {
      const int e = id_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (e != static_cast<int>(x)) witness_[x].push_back(e);
    }
    return true;
  }

  void branch(std::size_t i) {
    if (current_ >= best_) return;
    if (i == edges_.size()) {
      best_ = current_;
      best_state_ = state_;
      return;
    }
    auto [u, v] = edges_[i];

    // exclude
    state_[i] = 2;
    unlink(upper_, u, v);
    bool ok = refresh_witness(i);
    for (std::size_t x = 0; ok && x < i; ++x) {
      if (state_[x] != 2) continue;
      if (std::find(witness_[x].begin(), witness_[x].end(), static_cast<int>(i)) != witness_[x].end())
        ok = refresh_witness(x);
    }
    if (ok) branch(i + 1);
    link(upper_, u, v);

    // include
    state_[i] = 1;
    link(h_, u, v);
    if (current_ + 1 < best_ && !find_copy_through(h_, pinned_, u, v)) {
      ++current_;
      branch(i + 1);
      --current_;
    }
    unlink(h_, u, v);
    state_[i] = 0;
  }

  const Graph& g_;
  std::vector<Pattern> pinned_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> id_;
  std::vector<VertexSet> h_;
  std::vector<VertexSet> upper_;
  std::vector<std::vector<int>> witness_;
  std::vector<char> state_;
  std::vector<char> best_state_;
  std::size_t current_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  std::vector<VertexSet> rows;
  for (std::size_t v = 0; v < host.order(); ++v) rows.push_back(host.neighbours(static_cast<Vertex>(v)));
  return find_copy(rows, compile(pattern)).has_value();
}

SatResult sat_oracle_generic(const Graph& G, const Graph& F) {
  if (G.order() > kGenericMaxOrder)
    throw std::invalid_argument("sat_oracle_generic: n exceeds the cap of " + std::to_string(kGenericMaxOrder));
  if (F.order() > kGenericMaxPattern)
    throw std::invalid_argument("sat_oracle_generic: pattern exceeds " + std::to_string(kGenericMaxPattern) +
                                " vertices");
  if (F.size() == 0) throw std::invalid_argument("sat_oracle_generic: pattern must have an edge");
  return GenericOracle(G, F).solve();
}

}  // namespace satstar
