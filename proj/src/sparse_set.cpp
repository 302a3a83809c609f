#include "satstar/sparse_set.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace satstar {

std::string to_string(SparseMode mode) { return mode == SparseMode::at_most ? "at-most" : "exactly"; }

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));
  std::vector<bool> removed(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    removed[pick] = true;
    order.push_back(static_cast<Vertex>(pick));
    g.neighbours(static_cast<Vertex>(pick)).for_each([&](Vertex u) {
      if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    });
  }
  return order;
}

namespace {

enum class Goal { maximize_at_most, maximize_exactly, reach_size };

// Search for large vertex sets inducing at most `edge_budget` edges. Vertices are
// relabelled by degeneracy order so bit order matches the static branching order.
class SparseSearch {
 public:
  SparseSearch(const Graph& g, std::size_t edge_budget, Goal goal, std::uint64_t node_budget)
      : n_(g.order()), edge_budget_(edge_budget), goal_(goal), node_budget_(node_budget) {
    order_ = degeneracy_order(g);
    std::vector<Vertex> position(n_);
    for (std::size_t i = 0; i < n_; ++i) position[static_cast<std::size_t>(order_[i])] = static_cast<Vertex>(i);
    adj_.assign(n_, VertexSet(n_));
    for (auto [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(position[static_cast<std::size_t>(u)])].set(position[static_cast<std::size_t>(v)]);
      adj_[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])].set(position[static_cast<std::size_t>(u)]);
    }
  }

  // Stop as soon as an incumbent of this size is recorded.
  void set_stop_size(long long s) { stop_size_ = s; }
  // Only sets strictly larger than this are of interest.
  void set_floor(long long s) { best_size_ = s; }

  void run() {
    frames_.clear();
    frames_.resize(n_ + 2, Frame{VertexSet(n_), std::vector<int>(n_, 0), {}, {}, {}});
    frames_[0].candidates = VertexSet::full(n_);
    std::fill(frames_[0].cost.begin(), frames_[0].cost.end(), 0);
    expand(0, 0);
  }

  bool aborted() const { return aborted_; }
  bool found() const { return found_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t best_edges() const { return best_edges_; }

  std::vector<Vertex> best_set() const {
    std::vector<Vertex> out;
    for (Vertex v : best_) out.push_back(order_[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Frame {
    VertexSet candidates;
    std::vector<int> cost;  // edges from each candidate into the current set
    std::vector<Vertex> verts;
    std::vector<int> colour;
    std::vector<std::size_t> class_bound;
  };

  void record(std::size_t edges) {
    best_ = chosen_;
    best_size_ = static_cast<long long>(chosen_.size());
    best_edges_ = edges;
    found_ = true;
    if (stop_size_ >= 0 && best_size_ >= stop_size_) stop_ = true;
  }

  // Greedy partition of the candidates into cliques of the host graph. Any set
  // inducing at most B edges meets a clique in j vertices at a cost of C(j,2).
  void colour_candidates(Frame& f) {
    f.verts.clear();
    f.colour.clear();
    VertexSet uncoloured = f.candidates;
    VertexSet cls(n_);
    int colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      cls = uncoloured;
      while (!cls.empty()) {
        Vertex v = cls.first();
        cls.reset(v);
        cls &= adj_[static_cast<std::size_t>(v)];
        uncoloured.reset(v);
        f.verts.push_back(v);
        f.colour.push_back(colour);
      }
    }
  }

  // class_bound[c-1] = largest j such that j candidates from classes 1..c can join
  // at total cost <= budget; inside a clique class the q-th cheapest member (0-based)
  // costs its edges into the current set plus q edges to cheaper classmates.
  void class_bounds(Frame& f, std::size_t budget) {
    f.class_bound.clear();
    hist_.assign(budget + 1, 0);
    std::size_t i = 0;
    while (i < f.verts.size()) {
      std::size_t j = i;
      class_costs_.clear();
      while (j < f.verts.size() && f.colour[j] == f.colour[i]) {
        class_costs_.push_back(f.cost[static_cast<std::size_t>(f.verts[j])]);
        ++j;
      }
      std::sort(class_costs_.begin(), class_costs_.end());
      for (std::size_t q = 0; q < class_costs_.size(); ++q) {
        const std::size_t mg = static_cast<std::size_t>(class_costs_[q]) + q;
        if (mg > budget) break;
        ++hist_[mg];
      }
      std::size_t taken = hist_[0], left = budget;
      for (std::size_t c = 1; c <= budget && left >= c; ++c) {
        const std::size_t can = std::min(hist_[c], left / c);
        taken += can;
        left -= can * c;
      }
      f.class_bound.push_back(taken);
      i = j;
    }
  }

  void expand(std::size_t depth, std::size_t edges) {
    if (stop_) return;
    if (++nodes_ > node_budget_) {
      aborted_ = true;
      stop_ = true;
      return;
    }
    const auto size = static_cast<long long>(chosen_.size());
    switch (goal_) {
      case Goal::maximize_at_most:
        if (size > best_size_) record(edges);
        break;
      case Goal::maximize_exactly:
        if (edges == edge_budget_ && size > best_size_) record(edges);
        break;
      case Goal::reach_size:
        if (size > best_size_) {
          record(edges);
          stop_ = true;
          return;
        }
        break;
    }
    if (stop_) return;

    Frame& f = frames_[depth];
    if (f.candidates.empty()) return;
    const std::size_t slack = edge_budget_ - edges;

    colour_candidates(f);
    class_bounds(f, slack);
    if (size + static_cast<long long>(f.class_bound.back()) <= best_size_) return;

    Frame& child = frames_[depth + 1];
    for (std::size_t i = f.verts.size(); i-- > 0;) {
      const long long prefix = static_cast<long long>(i) + 1;
      const long long bound =
          std::min(prefix, static_cast<long long>(f.class_bound[static_cast<std::size_t>(f.colour[i] - 1)]));
      if (size + bound <= best_size_) return;

      const Vertex v = f.verts[i];
      const auto& row = adj_[static_cast<std::size_t>(v)];
      const std::size_t new_edges = edges + static_cast<std::size_t>(f.cost[static_cast<std::size_t>(v)]);
      const std::size_t new_slack = edge_budget_ - new_edges;

      f.candidates.reset(v);
      child.candidates = f.candidates;
      f.candidates.for_each([&](Vertex u) {
        const int c = f.cost[static_cast<std::size_t>(u)] + (row.test(u) ? 1 : 0);
        if (static_cast<std::size_t>(c) > new_slack)
          child.candidates.reset(u);
        else
          child.cost[static_cast<std::size_t>(u)] = c;
      });

      chosen_.push_back(v);
      expand(depth + 1, new_edges);
      chosen_.pop_back();
      if (stop_) return;
    }
  }

  std::size_t n_;
  std::size_t edge_budget_;
  Goal goal_;
  std::uint64_t node_budget_;
  std::vector<Vertex> order_;
  std::vector<VertexSet> adj_;
  std::vector<Frame> frames_;
  std::vector<std::size_t> hist_;
  std::vector<int> class_costs_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
  long long best_size_ = -1;
  long long stop_size_ = -1;
  std::size_t best_edges_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
  bool found_ = false;
};

}  // namespace

std::optional<SparseSetResult> max_sparse_set(const Graph& g, std::size_t m, SparseMode mode,
                                              std::uint64_t budget) {
  SparseSearch at_most(g, m, Goal::maximize_at_most, budget);
  at_most.run();
  SparseSetResult out;
  out.set = at_most.best_set();
  out.size = out.set.size();
  out.induced_edges = at_most.best_edges();
  out.exact = !at_most.aborted();
  out.nodes = at_most.nodes();
  if (mode == SparseMode::at_most || out.induced_edges == m) return out;

  // Exactly-m sets are a subfamily of the at-most-m sets searched above, so the
  // same tree with the incumbent restricted to exact hits is complete.
  const std::uint64_t remaining = budget > out.nodes ? budget - out.nodes : 0;
  SparseSearch exactly(g, m, Goal::maximize_exactly, remaining);
  if (out.exact) exactly.set_stop_size(static_cast<long long>(out.size));
  exactly.run();
  if (!exactly.found()) return std::nullopt;
  SparseSetResult ex;
  ex.set = exactly.best_set();
  ex.size = ex.set.size();
  ex.induced_edges = exactly.best_edges();
  ex.exact = out.exact && !exactly.aborted();
  ex.nodes = out.nodes + exactly.nodes();
  return ex;
}

DecisionResult sparse_set_decision_budgeted(const Graph& g, std::size_t k, std::size_t threshold,
                                            std::uint64_t budget) {
  DecisionResult out;
  if (threshold == 0 || k > g.order()) return out;
  if (k == 0) {
    out.witness = std::vector<Vertex>{};
    return out;
  }
  SparseSearch search(g, threshold - 1, Goal::reach_size, budget);
  search.set_floor(static_cast<long long>(k) - 1);
  search.run();
  out.nodes = search.nodes();
  if (search.found()) {
    auto set = search.best_set();
    out.witness_edges = induced_edge_count(g, set);
    out.witness = std::move(set);
  } else {
    out.complete = !search.aborted();
  }
  return out;
}

std::optional<std::vector<Vertex>> sparse_set_decision(const Graph& g, std::size_t k, std::size_t threshold) {
  return sparse_set_decision_budgeted(g, k, threshold, std::numeric_limits<std::uint64_t>::max()).witness;
}

namespace {

void count_rec(const Graph& g, Vertex next, std::size_t remaining, std::size_t edges, std::size_t target,
               VertexSet& chosen, std::uint64_t& total) {
  if (remaining == 0) {
    if (edges == target) ++total;
    return;
  }
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v = next; v + static_cast<Vertex>(remaining) <= n; ++v) {
    const std::size_t add = g.neighbours(v).intersect_count(chosen);
    if (edges + add > target) continue;
    chosen.set(v);
    count_rec(g, v + 1, remaining - 1, edges + add, target, chosen, total);
    chosen.reset(v);
  }
}

}  // namespace

std::uint64_t count_sets(const Graph& g, std::size_t k, std::size_t m) {
  if (g.order() > kCountSetsMaxOrder)
    throw std::invalid_argument("count_sets: n exceeds the enumeration cap of " +
                                std::to_string(kCountSetsMaxOrder));
  if (k > g.order()) return 0;
  VertexSet chosen(g.order());
  std::uint64_t total = 0;
  count_rec(g, 0, k, 0, m, chosen, total);
  return total;
}

}  // namespace satstar
