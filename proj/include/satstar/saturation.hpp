#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "satstar/graph.hpp"

namespace satstar {

/// A K_{1,r}-saturated spanning subgraph H with its degree split.
/// V1 holds the vertices of H-degree <= r-2, V2 those of H-degree exactly r-1.
struct SaturatedSubgraph {
  Graph H;
  VertexSet V1;
  VertexSet V2;
  std::size_t cross_edges = 0;  // H-edges between V1 and V2
  std::size_t edge_count = 0;
  std::size_t v1_edges = 0;     // edges of H (equivalently of the host) inside V1
};

enum class SatMethod { oracle, structured, generic, constructed };

std::string to_string(SatMethod m);

struct SatResult {
  std::size_t value = 0;
  SaturatedSubgraph witness;
  SatMethod method = SatMethod::oracle;
  bool proven = false;
};

struct SaturationCheck {
  bool ok = true;
  std::string violation;            // empty when ok
  std::optional<Edge> edge;         // addable host edge with no full endpoint
  std::optional<Vertex> vertex;     // vertex with H-degree >= r
  explicit operator bool() const { return ok; }
};

/// Is H K_{1,r}-saturated in G? Throws std::invalid_argument if H is not a spanning subgraph of G.
SaturationCheck is_star_saturated(const Graph& G, const Graph& H, int r);

/// Splits H into V1/V2 and counts; assumes max degree of H <= r-1.
SaturatedSubgraph classify(const Graph& H, int r);

inline constexpr std::size_t kOracleMaxOrder = 12;
inline constexpr std::size_t kGenericMaxOrder = 8;
inline constexpr std::size_t kGenericMaxPattern = 5;

/// Exact sat(G, K_{1,r}) by branching over host edges. n <= 12.
SatResult sat_exact_oracle(const Graph& G, int r);

/// Exact sat(G, K_{1,r}) by enumerating V1 candidates in order of the bound
/// m(V1) + ceil((r-1)(n-|V1|)/2) and completing each with min_completion.
SatResult sat_exact_structured(const Graph& G, int r);

struct Completion {
  std::size_t cross_edges = 0;
  Graph H;
};

/// Cheapest H that contains G[V1], gives V \ V1 degree exactly r-1 and keeps V1
/// degrees <= r-2; minimises the number of V1-V2 edges. nullopt if none exists.
/// Throws std::invalid_argument if some vertex of V1 has G[V1]-degree > r-2.
std::optional<Completion> min_completion(const Graph& G, const VertexSet& V1, int r);

/// Exact sat(G, F) for tiny instances (n <= 8, |V(F)| <= 5, F with an edge).
SatResult sat_oracle_generic(const Graph& G, const Graph& F);

/// Does `host` contain `pattern` as a (not necessarily induced) subgraph?
bool contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace satstar
