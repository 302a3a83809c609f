#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satstar/graph.hpp"
#include "satstar/random.hpp"
#include "satstar/saturation.hpp"
#include "satstar/sparse_set.hpp"
#include "satstar/theory.hpp"

namespace satstar {

/// Partition of V2 into r-cliques plus one remainder clique K* with r <= |K*| <= 2r-1.
struct CliqueCover {
  std::vector<std::vector<Vertex>> cliques;  // each of size r, ascending
  std::vector<Vertex> remainder;             // K*, ascending
  VertexSet covered;
};

inline constexpr std::size_t kDefaultCoverRestarts = 64;

/// Sizes are fixed up front: q = |V2|/r - 1 cliques of size r, remainder t = |V2| - qr.
/// Each attempt draws a fresh sub-seed; nullopt after `restarts` failed attempts.
/// Throws std::invalid_argument if |V2| < r.
std::optional<CliqueCover> clique_cover(const Graph& g, const VertexSet& v2, int r, const Seed& seed,
                                        std::size_t restarts = kDefaultCoverRestarts);

/// Throws std::logic_error unless `cover` is a valid cover of v2 for r in g.
void check_clique_cover(const Graph& g, const VertexSet& v2, int r, const CliqueCover& cover);

struct RemainderEdges {
  std::vector<Edge> edges;             // inside K*
  std::optional<Vertex> cross_anchor;  // K* vertex owed one edge to V1
};

/// (r-1)-regularises the clique K* (cyclic order = ascending ids): circulant
/// distances 1..s, plus diameters when r-1 = 2s+1 and |K*| is even, or opposite
/// pairs on K* minus the anchor when r-1 and |K*| are both odd.
RemainderEdges regularize_remainder(const std::vector<Vertex>& remainder, int r, bool need_cross,
                                    std::optional<Vertex> anchor);

enum class ParityCase { even, odd_even, odd_odd };

std::string to_string(ParityCase c);

/// How the almost-independent set V1 is chosen.
struct V1Mode {
  enum class Kind { automatic, independent, sparse };
  Kind kind = Kind::automatic;
  std::size_t m = 0;  // edge allowance for Kind::sparse

  static V1Mode automatic() { return {Kind::automatic, 0}; }
  static V1Mode independent() { return {Kind::independent, 0}; }
  static V1Mode sparse(std::size_t m) { return {Kind::sparse, m}; }
};

std::string to_string(const V1Mode& mode);
/// Parses "auto", "independent" or "sparse:M".
V1Mode parse_v1_mode(const std::string& text);

struct BuildOptions {
  V1Mode mode = V1Mode::automatic();
  /// With params, automatic mode follows the predicted case; without, it
  /// minimises the edge count over m = 0..ceil((r-3)/2)+1.
  std::optional<TheoryParams> params;
  std::size_t restarts = kDefaultCoverRestarts;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct BuildReport {
  SaturatedSubgraph result;
  V1Mode v1_mode;  // resolved mode (never automatic)
  ParityCase parity_case = ParityCase::even;
  std::optional<Vertex> cross_vertex;  // anchor in K* joined to V1
  std::size_t restarts = 0;            // cover attempts used, over all V1 candidates
  bool v1_exact = true;                // V1 search finished within budget
  CliqueCover cover;
};

/// Builds a K_{1,r}-saturated subgraph with m(V1) + ceil((r-1)|V2|/2) edges.
/// Automatic mode moves to the next V1 candidate when a cover or anchor cannot
/// be found; explicit modes have a single candidate. Throws std::runtime_error
/// once every candidate has failed (0 < |V2| < r, no cover, no anchor) and
/// std::logic_error if the result fails verification.
BuildReport build_saturated(const Graph& g, int r, const BuildOptions& options, const Seed& seed);

}  // namespace satstar
