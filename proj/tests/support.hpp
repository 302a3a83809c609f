#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satstar/graph.hpp"

namespace satstar::testing {

inline std::size_t subset_edges(const Graph& g, std::uint32_t mask) {
  std::size_t e = 0;
  for (auto [u, v] : g.edges())
    if ((mask >> u & 1U) && (mask >> v & 1U)) ++e;
  return e;
}

/// Largest subset with at most / exactly m induced edges; nullopt when none has exactly m.
inline std::optional<std::size_t> brute_sparse(const Graph& g, std::size_t m, bool exactly) {
  std::optional<std::size_t> best;
  const std::uint32_t limit = 1U << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const std::size_t e = subset_edges(g, mask);
    if (exactly ? e != m : e > m) continue;
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (!best || size > *best) best = size;
  }
  return best;
}

inline std::uint64_t brute_count(const Graph& g, std::size_t k, std::size_t m) {
  std::uint64_t total = 0;
  const std::uint32_t limit = 1U << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == k && subset_edges(g, mask) == m) ++total;
  return total;
}

inline bool brute_has_sparse_kset(const Graph& g, std::size_t k, std::size_t threshold) {
  const std::uint32_t limit = 1U << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == k && subset_edges(g, mask) < threshold) return true;
  return false;
}

/// Minimum size of a maximal matching, by enumeration of edge subsets.
inline std::size_t brute_min_maximal_matching(const Graph& g) {
  const auto edges = g.edges();
  std::size_t best = edges.size();
  const std::uint32_t limit = 1U << edges.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<int> covered(g.order(), 0);
    bool matching = true;
    for (std::size_t i = 0; i < edges.size() && matching; ++i) {
      if (!(mask >> i & 1U)) continue;
      auto [u, v] = edges[i];
      if (covered[static_cast<std::size_t>(u)]++ || covered[static_cast<std::size_t>(v)]++) matching = false;
    }
    if (!matching) continue;
    bool maximal = true;
    for (auto [u, v] : edges)
      if (!covered[static_cast<std::size_t>(u)] && !covered[static_cast<std::size_t>(v)]) maximal = false;
    if (maximal) best = std::min(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

}  // namespace satstar::testing
