#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "satstar/graph.hpp"

namespace satstar {

/// Smallest integer T such that "e < (r-1)(k-x0)/2 + mu" is equivalent to "e < T",
/// i.e. ceil(((r-1)(k-x0) + 2 mu) / 2), computed in doubled integer arithmetic.
long long sparse_threshold(long long k, long long x0, int r, int mu);

/// Minimum edge count of a k-vertex graph whose independence number is at most alpha
/// (complement of the Turan graph). Every k-set of a host with alpha(G) <= alpha induces at least this many.
std::size_t min_edges_given_independence(std::size_t k, std::size_t alpha);

enum class KCheckMethod { search, counting_bound, budget_exhausted };

std::string to_string(KCheckMethod m);

struct KCheck {
  std::size_t k = 0;
  long long threshold = 0;
  KCheckMethod method = KCheckMethod::search;
  std::uint64_t nodes = 0;
};

struct SparseCounterexample {
  std::size_t k = 0;
  std::vector<Vertex> set;
  std::size_t edges = 0;
  long long threshold = 0;
};

struct Lemma1Report {
  bool ok = true;
  std::optional<SparseCounterexample> counterexample;
  std::size_t k_first = 0;  // first k examined (x0 + 1)
  std::size_t k_last = 0;   // last k examined; k_last < k_first means an empty range
  /// Every k in [x0+1, n] is settled: searched, or covered by the independence-number bound.
  bool covers_all_k = false;
  /// No per-k search ran out of budget.
  bool complete = true;
  std::vector<KCheck> steps;
};

struct Lemma1Options {
  /// Exact independence number of the host, if already known; computed otherwise.
  std::optional<std::size_t> independence_number;
  std::uint64_t budget_per_k = std::numeric_limits<std::uint64_t>::max();
};

/// Checks, for k = x0+1..k_max, that no k-vertex set induces fewer than
/// (r-1)(k-x0)/2 + mu edges. Without k_max the scan runs until every remaining
/// k is covered by the independence-number bound (or k = n).
Lemma1Report check_lemma1(const Graph& g, long long x0, int r, int mu, std::optional<std::size_t> k_max = {},
                          const Lemma1Options& options = {});

}  // namespace satstar
