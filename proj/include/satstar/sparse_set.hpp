#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satstar/graph.hpp"

namespace satstar {

enum class SparseMode { at_most, exactly };

std::string to_string(SparseMode mode);

/// Default search-tree node budget for max_sparse_set.
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// A vertex set together with the number of edges it induces.
struct SparseSetResult {
  std::vector<Vertex> set;  // ascending
  std::size_t induced_edges = 0;
  std::size_t size = 0;
  bool exact = false;       // search completed, so the size is optimal
  std::uint64_t nodes = 0;  // search-tree nodes visited
};

/// Maximum-size vertex set inducing at most (or exactly) m edges.
///
/// Branch and bound over a degeneracy ordering with a greedy clique-partition
/// bound. When the node budget runs out the best set found so far is returned
/// with exact = false. In exactly mode, nullopt means no vertex set induces
/// exactly m edges (or none was found within the budget).
std::optional<SparseSetResult> max_sparse_set(const Graph& g, std::size_t m, SparseMode mode,
                                              std::uint64_t budget = kDefaultNodeBudget);

struct DecisionResult {
  std::optional<std::vector<Vertex>> witness;
  std::size_t witness_edges = 0;
  bool complete = true;  // false iff the budget ran out before a verdict
  std::uint64_t nodes = 0;
};

/// Is there a k-vertex set inducing fewer than `threshold` edges? Complete search.
std::optional<std::vector<Vertex>> sparse_set_decision(const Graph& g, std::size_t k, std::size_t threshold);

/// As sparse_set_decision, but stops after `budget` nodes with complete = false.
DecisionResult sparse_set_decision_budgeted(const Graph& g, std::size_t k, std::size_t threshold,
                                            std::uint64_t budget);

/// Hard cap on n for count_sets.
inline constexpr std::size_t kCountSetsMaxOrder = 20;

/// Number of k-subsets inducing exactly m edges. Throws std::invalid_argument for n > 20.
std::uint64_t count_sets(const Graph& g, std::size_t k, std::size_t m);

/// Repeatedly removes a minimum-degree vertex (ties: smallest id); returns the removal order.
std::vector<Vertex> degeneracy_order(const Graph& g);

}  // namespace satstar
