#include "satstar/construct.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace satstar {

std::string to_string(ParityCase c) {
  switch (c) {
    case ParityCase::even: return "even";
    case ParityCase::odd_even: return "odd-even";
    case ParityCase::odd_odd: return "odd-odd";
  }
  return "unknown";
}

std::string to_string(const V1Mode& mode) {
  switch (mode.kind) {
    case V1Mode::Kind::automatic: return "auto";
    case V1Mode::Kind::independent: return "independent";
    case V1Mode::Kind::sparse: return "sparse:" + std::to_string(mode.m);
  }
  return "unknown";
}

V1Mode parse_v1_mode(const std::string& text) {
  if (text == "auto") return V1Mode::automatic();
  if (text == "independent") return V1Mode::independent();
  if (text.rfind("sparse:", 0) == 0) {
    const std::string digits = text.substr(7);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad sparse mode \"" + text + "\"");
    return V1Mode::sparse(std::stoul(digits));
  }
  throw std::invalid_argument("unknown V1 mode \"" + text + "\" (auto|independent|sparse:M)");
}

// ---------------------------------------------------------------------------
// Clique cover.

namespace {

constexpr std::uint64_t kCliqueSearchNodes = 200'000;

class CoverAttempt {
 public:
  CoverAttempt(const Graph& g, const VertexSet& v2, int r, const Seed& seed)
      : g_(g), v2_(v2), r_(static_cast<std::size_t>(r)), rng_(seed), n_(g.order()) {
    tiebreak_.resize(n_);
    for (auto& key : tiebreak_) key = rng_.next();
  }

  std::optional<CliqueCover> run() {
    const std::size_t total = v2_.count();
    const std::size_t q = total / r_ - 1;
    const std::size_t t = total - q * r_;

    VertexSet pool = v2_;
    auto remainder = find_clique(pool, t, std::nullopt);
    if (!remainder) return std::nullopt;
    for (Vertex v : *remainder) pool.reset(v);

    std::vector<int> degree(n_, 0);
    pool.for_each([&](Vertex v) { degree[static_cast<std::size_t>(v)] = static_cast<int>(g_.neighbours(v).intersect_count(pool)); });
    auto take = [&](Vertex v) {
      pool.reset(v);
      g_.neighbours(v).for_each([&](Vertex u) {
        if (pool.test(u)) --degree[static_cast<std::size_t>(u)];
      });
    };

    std::vector<std::vector<Vertex>> groups;
    std::vector<Vertex> leftover;
    while (!pool.empty()) {
      Vertex v = -1;
      pool.for_each([&](Vertex x) {
        if (v < 0 || lower_priority(x, v, degree)) v = x;
      });
      auto clique = find_clique(pool, r_, v);
      if (clique) {
        for (Vertex x : *clique) take(x);
        groups.push_back(std::move(*clique));
      } else {
        take(v);
        leftover.push_back(v);
      }
    }
    rng_.shuffle(leftover);
    for (std::size_t i = 0; i < leftover.size(); i += r_)
      groups.emplace_back(leftover.begin() + static_cast<std::ptrdiff_t>(i),
                          leftover.begin() + static_cast<std::ptrdiff_t>(i + r_));
    groups.push_back(*remainder);

    if (!repair(groups)) return std::nullopt;

    CliqueCover cover;
    cover.remainder = groups.back();
    std::sort(cover.remainder.begin(), cover.remainder.end());
    groups.pop_back();
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    std::sort(groups.begin(), groups.end());
    cover.cliques = std::move(groups);
    cover.covered = v2_;
    return cover;
  }

 private:
  bool lower_priority(Vertex a, Vertex b, const std::vector<int>& degree) const {
    const auto da = degree[static_cast<std::size_t>(a)], db = degree[static_cast<std::size_t>(b)];
    if (da != db) return da < db;
    return tiebreak_[static_cast<std::size_t>(a)] < tiebreak_[static_cast<std::size_t>(b)];
  }

  // A clique of exactly `size` vertices inside `within`, containing `seed` if given.
  std::optional<std::vector<Vertex>> find_clique(const VertexSet& within, std::size_t size,
                                                 std::optional<Vertex> seed) {
    std::vector<Vertex> chosen;
    VertexSet cand = within;
    if (seed) {
      chosen.push_back(*seed);
      cand &= g_.neighbours(*seed);
    }
    std::uint64_t nodes = 0;
    if (grow(chosen, cand, size, nodes)) return chosen;
    return std::nullopt;
  }

  bool grow(std::vector<Vertex>& chosen, const VertexSet& cand, std::size_t size, std::uint64_t& nodes) {
    if (chosen.size() == size) return true;
    if (++nodes > kCliqueSearchNodes) return false;
    if (chosen.size() + cand.count() < size) return false;
    // Prefer candidates with few neighbours among the remaining candidates, so
    // well-connected vertices stay available for later cliques.
    std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Vertex>> order;
    cand.for_each([&](Vertex v) {
      order.push_back({{g_.neighbours(v).intersect_count(cand), tiebreak_[static_cast<std::size_t>(v)]}, v});
    });
    const bool need_many = size - chosen.size() > 2;
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
      if (need_many && a.first.first != b.first.first) return a.first.first > b.first.first;
      return a.first < b.first;
    });
    VertexSet rest = cand;
    for (const auto& item : order) {
      Vertex v = item.second;
      rest.reset(v);
      VertexSet next = rest & g_.neighbours(v);
      chosen.push_back(v);
      if (grow(chosen, next, size, nodes)) return true;
      chosen.pop_back();
      if (nodes > kCliqueSearchNodes) return false;
    }
    return false;
  }

  // Min-conflicts swap search: conflicts are non-adjacent pairs inside a group.
  bool repair(std::vector<std::vector<Vertex>>& groups) {
    const std::size_t gcount = groups.size();
    std::vector<std::size_t> group_of(n_, gcount), slot_of(n_, 0);
    for (std::size_t gi = 0; gi < gcount; ++gi)
      for (std::size_t s = 0; s < groups[gi].size(); ++s) {
        group_of[static_cast<std::size_t>(groups[gi][s])] = gi;
        slot_of[static_cast<std::size_t>(groups[gi][s])] = s;
      }
    const auto members = v2_.to_vector();
    std::vector<std::vector<int>> cnt(n_, std::vector<int>(gcount, 0));
    for (Vertex x : members)
      g_.neighbours(x).for_each([&](Vertex y) {
        if (group_of[static_cast<std::size_t>(y)] < gcount) ++cnt[static_cast<std::size_t>(x)][group_of[static_cast<std::size_t>(y)]];
      });
    auto own_conflicts = [&](Vertex x) {
      const auto xi = static_cast<std::size_t>(x);
      const auto gi = group_of[xi];
      return static_cast<int>(groups[gi].size()) - 1 - cnt[xi][gi];
    };
    long long total = 0;
    for (Vertex x : members) total += own_conflicts(x);
    total /= 2;

    const std::size_t max_steps = 400 * members.size() + 10000;
    const std::size_t tenure = 5 + members.size() / 20;
    std::vector<std::size_t> tabu_until(n_, 0);
    std::vector<Vertex> conflicted;
    for (std::size_t step = 1; total > 0 && step <= max_steps; ++step) {
      conflicted.clear();
      for (Vertex x : members)
        if (own_conflicts(x) > 0) conflicted.push_back(x);
      const Vertex u = conflicted[rng_.below(conflicted.size())];
      const auto ui = static_cast<std::size_t>(u);
      const auto a = group_of[ui];

      long long best_delta = std::numeric_limits<long long>::max();
      Vertex best_w = -1;
      std::uint64_t best_key = 0;
      for (Vertex w : members) {
        const auto wi = static_cast<std::size_t>(w);
        const auto b = group_of[wi];
        if (b == a) continue;
        const int adj = g_.adjacent(u, w) ? 1 : 0;
        const long long delta = cnt[ui][a] + cnt[wi][b] - cnt[wi][a] - cnt[ui][b] + 2 * adj;
        const bool aspiration = total + delta == 0;
        if (!aspiration && (tabu_until[ui] > step || tabu_until[wi] > step)) continue;
        const std::uint64_t key = rng_.next();
        if (delta < best_delta || (delta == best_delta && key < best_key)) {
          best_delta = delta;
          best_w = w;
          best_key = key;
        }
      }
      if (best_w < 0) continue;
      const auto wi = static_cast<std::size_t>(best_w);
      const auto b = group_of[wi];
      for (Vertex x : members) {
        const auto xi = static_cast<std::size_t>(x);
        const int to_w = g_.adjacent(x, best_w) ? 1 : 0, to_u = g_.adjacent(x, u) ? 1 : 0;
        cnt[xi][a] += to_w - to_u;
        cnt[xi][b] += to_u - to_w;
      }
      std::swap(groups[a][slot_of[ui]], groups[b][slot_of[wi]]);
      std::swap(slot_of[ui], slot_of[wi]);
      group_of[ui] = b;
      group_of[wi] = a;
      total += best_delta;
      tabu_until[ui] = tabu_until[wi] = step + tenure;
    }
    return total == 0;
  }

  const Graph& g_;
  const VertexSet& v2_;
  std::size_t r_;
  SeedStream rng_;
  std::size_t n_;
  std::vector<std::uint64_t> tiebreak_;
};

}  // namespace

void check_clique_cover(const Graph& g, const VertexSet& v2, int r, const CliqueCover& cover) {
  VertexSet seen(g.order());
  auto check_clique = [&](const std::vector<Vertex>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!v2.contains(c[i])) throw std::logic_error("clique cover: vertex outside V2");
      if (seen.test(c[i])) throw std::logic_error("clique cover: pieces overlap");
      seen.set(c[i]);
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!g.adjacent(c[i], c[j])) throw std::logic_error("clique cover: piece is not a clique");
    }
  };
  for (const auto& c : cover.cliques) {
    if (c.size() != static_cast<std::size_t>(r)) throw std::logic_error("clique cover: piece of wrong size");
    check_clique(c);
  }
  const auto t = cover.remainder.size();
  if (t < static_cast<std::size_t>(r) || t > static_cast<std::size_t>(2 * r - 1))
    throw std::logic_error("clique cover: remainder size outside [r, 2r-1]");
  check_clique(cover.remainder);
  if (!(seen == v2)) throw std::logic_error("clique cover: V2 not covered");
}

std::optional<CliqueCover> clique_cover(const Graph& g, const VertexSet& v2, int r, const Seed& seed,
                                        std::size_t restarts) {
  if (r < 2) throw std::invalid_argument("clique_cover: r must be at least 2");
  if (v2.count() < static_cast<std::size_t>(r))
    throw std::invalid_argument("clique_cover: |V2| = " + std::to_string(v2.count()) + " is below r");
  for (std::size_t attempt = 0; attempt < restarts; ++attempt) {
    auto cover = CoverAttempt(g, v2, r, seed.derive(attempt)).run();
    if (cover) {
      check_clique_cover(g, v2, r, *cover);
      return cover;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Remainder regularisation.

RemainderEdges regularize_remainder(const std::vector<Vertex>& remainder, int r, bool need_cross,
                                    std::optional<Vertex> anchor) {
  std::vector<Vertex> ring = remainder;
  std::sort(ring.begin(), ring.end());
  const std::size_t t = ring.size();
  if (r < 2 || t < static_cast<std::size_t>(r) || t > static_cast<std::size_t>(2 * r - 1))
    throw std::invalid_argument("regularize_remainder: need r <= |K*| <= 2r-1");
  if (std::adjacent_find(ring.begin(), ring.end()) != ring.end())
    throw std::invalid_argument("regularize_remainder: repeated vertex");
  const bool odd_degree = (r - 1) % 2 != 0;
  const bool odd_size = t % 2 != 0;
  if (need_cross != (odd_degree && odd_size))
    throw std::invalid_argument("regularize_remainder: a cross edge is needed iff r-1 and |K*| are both odd");
  if (need_cross && (!anchor || !std::binary_search(ring.begin(), ring.end(), *anchor)))
    throw std::invalid_argument("regularize_remainder: cross edge requested without an anchor in K*");

  const std::size_t s = static_cast<std::size_t>(r - 1) / 2;
  RemainderEdges out;
  auto add = [&](Vertex a, Vertex b) { out.edges.emplace_back(std::min(a, b), std::max(a, b)); };
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t d = 1; d <= s; ++d) add(ring[i], ring[(i + d) % t]);

  if (odd_degree && !odd_size) {
    for (std::size_t i = 0; i < t / 2; ++i) add(ring[i], ring[i + t / 2]);
  } else if (odd_degree && odd_size) {
    std::vector<Vertex> rest;
    for (Vertex v : ring)
      if (v != *anchor) rest.push_back(v);
    const std::size_t half = rest.size() / 2;
    for (std::size_t i = 0; i < half; ++i) add(rest[i], rest[i + half]);
    out.cross_anchor = anchor;
  }

  std::sort(out.edges.begin(), out.edges.end());
  if (std::adjacent_find(out.edges.begin(), out.edges.end()) != out.edges.end())
    throw std::logic_error("regularize_remainder: duplicate edge");
  return out;
}

// ---------------------------------------------------------------------------
// Builder.

namespace {

struct V1Choice {
  SparseSetResult set;
  V1Mode mode;
};

long long objective(const SparseSetResult& s, std::size_t n, int r) {
  return static_cast<long long>(s.induced_edges) +
         ceil_half(static_cast<long long>(r - 1) * static_cast<long long>(n - s.size));
}

// Candidate V1 sets, best first. Automatic mode ranks the preferred edge
// allowances by objective.
std::vector<V1Choice> v1_candidates(const Graph& g, int r, const BuildOptions& options) {
  auto search = [&](std::size_t m) {
    auto res = max_sparse_set(g, m, SparseMode::at_most, options.node_budget);
    return *res;  // at-most mode always yields a set (possibly empty)
  };
  auto mode_for = [](std::size_t m) { return m == 0 ? V1Mode::independent() : V1Mode::sparse(m); };
  switch (options.mode.kind) {
    case V1Mode::Kind::independent: return {{search(0), V1Mode::independent()}};
    case V1Mode::Kind::sparse: return {{search(options.mode.m), options.mode}};
    case V1Mode::Kind::automatic: break;
  }
  std::size_t max_m = static_cast<std::size_t>(ceil_half(r - 3)) + 1;
  if (options.params) {
    TheoryParams params = *options.params;
    params.n = g.order();
    params.r = r;
    const auto pred = predict(params);
    max_m = pred.kase == PredictionCase::one_point ? 0 : static_cast<std::size_t>(pred.r_prime) + 1;
  }
  std::vector<std::pair<V1Choice, std::size_t>> preferred;
  for (std::size_t m = 0; m <= max_m; ++m) preferred.push_back({{search(m), mode_for(m)}, m});
  std::stable_sort(preferred.begin(), preferred.end(), [&](const auto& x, const auto& y) {
    return objective(x.first.set, g.order(), r) < objective(y.first.set, g.order(), r);
  });
  std::vector<V1Choice> out;
  for (auto& item : preferred) out.push_back(std::move(item.first));
  return out;
}

// Fallback allowances past the preferred range; searched only when needed.
inline constexpr std::size_t kFallbackAllowances = 2;

struct Assembly {
  CliqueCover cover;
  std::optional<Vertex> anchor, partner;
};

// Cover of V2 plus, when r-1 and |K*| are both odd, an anchor in K* with a V1
// partner of G[V1]-degree <= r-3. nullopt once the attempts run out.
std::optional<Assembly> assemble(const Graph& g, const VertexSet& v1, const VertexSet& v2, int r,
                                 const std::vector<int>& inner_degree, const Seed& seed, std::size_t restarts,
                                 std::size_t& attempts) {
  const bool odd_degree = (r - 1) % 2 != 0;
  for (std::size_t attempt = 0; attempt < restarts; ++attempt) {
    ++attempts;
    auto candidate = clique_cover(g, v2, r, seed.derive(attempt), 1);
    if (!candidate) continue;
    Assembly out;
    if (odd_degree && candidate->remainder.size() % 2 != 0) {
      for (Vertex a : candidate->remainder) {
        g.neighbours(a).for_each([&](Vertex u) {
          if (!out.partner && v1.test(u) && inner_degree[static_cast<std::size_t>(u)] <= r - 3) out.partner = u;
        });
        if (out.partner) {
          out.anchor = a;
          break;
        }
      }
      if (!out.anchor) continue;
    }
    out.cover = std::move(*candidate);
    return out;
  }
  return std::nullopt;
}

}  // namespace

BuildReport build_saturated(const Graph& g, int r, const BuildOptions& options, const Seed& seed) {
  if (r < 3) throw std::invalid_argument("build_saturated: r must be at least 3");
  const std::size_t n = g.order();
  auto candidates = v1_candidates(g, r, options);
  const bool explicit_mode = options.mode.kind != V1Mode::Kind::automatic;
  // Larger allowances serve when G[V2] lacks the clique sizes the preferred candidates need.
  std::size_t next_fallback = 0;
  for (const auto& c : candidates) next_fallback = std::max(next_fallback, c.mode.m + 1);
  const std::size_t fallback_end = explicit_mode ? next_fallback : next_fallback + kFallbackAllowances;

  std::string last_failure;
  std::size_t attempts = 0;
  for (std::size_t ci = 0;; ++ci) {
    if (ci == candidates.size()) {
      if (next_fallback >= fallback_end) break;
      auto res = max_sparse_set(g, next_fallback, SparseMode::at_most, options.node_budget);
      candidates.push_back({*res, V1Mode::sparse(next_fallback)});
      ++next_fallback;
    }
    const auto choice = candidates[ci];
    const VertexSet v1 = VertexSet::from_list(n, choice.set.set);
    std::vector<int> inner_degree(n, 0);
    bool degrees_ok = true;
    v1.for_each([&](Vertex v) {
      inner_degree[static_cast<std::size_t>(v)] = static_cast<int>(g.neighbours(v).intersect_count(v1));
      if (inner_degree[static_cast<std::size_t>(v)] > r - 2) degrees_ok = false;
    });
    const VertexSet v2 = v1.complement();
    const std::size_t v2_size = v2.count();
    std::string problem;
    if (!degrees_ok)
      problem = "a V1 vertex has G[V1]-degree above r-2";
    else if (v2_size > 0 && v2_size < static_cast<std::size_t>(r))
      problem = "|V2| = " + std::to_string(v2_size) + " is below r = " + std::to_string(r);
    if (!problem.empty()) {
      if (explicit_mode) throw std::runtime_error("build_saturated: " + problem);
      last_failure = problem;
      continue;
    }

    std::optional<Assembly> assembly;
    if (v2_size > 0) {
      // Later candidates reuse the same attempt seeds; the V2 differs, so the covers do too.
      assembly = assemble(g, v1, v2, r, inner_degree, seed, options.restarts, attempts);
      if (!assembly) {
        last_failure = "no clique cover with a usable anchor after " + std::to_string(options.restarts) +
                       " attempts for V1 mode " + to_string(choice.mode);
        continue;
      }
    }

    BuildReport report;
    report.v1_mode = choice.mode;
    report.v1_exact = choice.set.exact;
    report.restarts = attempts;
    std::vector<Edge> edges = g.induced_on(v1).edges();
    const bool odd_degree = (r - 1) % 2 != 0;
    if (assembly) {
      const bool odd_size = assembly->cover.remainder.size() % 2 != 0;
      report.parity_case = !odd_degree ? ParityCase::even : (odd_size ? ParityCase::odd_odd : ParityCase::odd_even);
      for (const auto& clique : assembly->cover.cliques)
        for (std::size_t i = 0; i < clique.size(); ++i)
          for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
      const auto anchor = assembly->anchor;
      auto rem = regularize_remainder(assembly->cover.remainder, r, anchor.has_value(), anchor);
      edges.insert(edges.end(), rem.edges.begin(), rem.edges.end());
      if (anchor) {
        const Vertex partner = *assembly->partner;
        edges.emplace_back(std::min(*anchor, partner), std::max(*anchor, partner));
        report.cross_vertex = anchor;
      }
      report.cover = std::move(assembly->cover);
    } else {
      report.parity_case = odd_degree ? ParityCase::odd_even : ParityCase::even;
    }

    Graph h(n, edges);
    auto check = is_star_saturated(g, h, r);
    if (!check) throw std::logic_error("build_saturated: construction not saturated: " + check.violation);
    report.result = classify(h, r);
    const long long expected = static_cast<long long>(choice.set.induced_edges) +
                               ceil_half(static_cast<long long>(r - 1) * static_cast<long long>(v2_size));
    if (static_cast<long long>(report.result.edge_count) != expected || !(report.result.V1 == v1))
      throw std::logic_error("build_saturated: edge-count identity violated");
    return report;
  }
  throw std::runtime_error("build_saturated: " + last_failure);
}

}  // namespace satstar
