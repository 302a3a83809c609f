#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "satstar/graph.hpp"
#include "satstar/random.hpp"
#include "satstar/vertex_set.hpp"

using namespace satstar;

TEST(VertexSet, BasicOperations) {
  VertexSet s(130);
  EXPECT_TRUE(s.empty());
  s.set(0);
  s.set(64);
  s.set(129);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.last(), 129);
  EXPECT_TRUE(s.test(64));
  EXPECT_FALSE(s.contains(130));
  auto c = s.complement();
  EXPECT_EQ(c.count(), 127u);
  EXPECT_FALSE(c.intersects(s));
  EXPECT_EQ((c | s).count(), 130u);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 64, 129}));
  EXPECT_TRUE(VertexSet::from_list(130, {0, 64}).is_subset_of(s));
  EXPECT_EQ(VertexSet::full(70).count(), 70u);
}

TEST(Seed, DeterministicAndDistinctStreams) {
  Seed a{42, 7}, b{42, 7}, c{42, 8};
  for (std::uint64_t i = 0; i < 100; ++i) {
    EXPECT_EQ(a.draw(i), b.draw(i));
    EXPECT_NE(a.draw(i), c.draw(i));
    const double u = a.uniform(i);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(a.derive(3), b.derive(3));
  EXPECT_NE(a.derive(3), a.derive(4));
  EXPECT_EQ(Seed::labelled(1, "graph"), Seed::labelled(1, "graph"));
}

TEST(Seed, FrozenStream) {
  // SplitMix64 finaliser of known inputs; guards against accidental algorithm drift.
  EXPECT_EQ(mix64(0), 0ULL);
  EXPECT_EQ(mix64(kGoldenGamma), 0xE220A8397B1DCDAFULL);
}

TEST(SeedStream, BelowIsInRangeAndShuffleIsPermutation) {
  SeedStream s(Seed{9, 1});
  for (int i = 0; i < 1000; ++i) EXPECT_LT(s.below(7), 7u);
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[static_cast<std::size_t>(i)] = i;
  s.shuffle(v);
  std::set<int> seen(v.begin(), v.end());
  EXPECT_EQ(seen.size(), 50u);
}

TEST(MakeGraph, PathAndComplete) {
  const Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3.size(), 2u);
  EXPECT_EQ(p3, Graph::path(3));
  std::vector<Edge> all;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) all.emplace_back(u, v);
  const Graph k4 = make_graph(4, all);
  EXPECT_EQ(k4.size(), 6u);
  EXPECT_EQ(k4, Graph::complete(4));
}

TEST(MakeGraph, DeduplicatesAndRejectsBadPairs) {
  EXPECT_EQ(make_graph(3, {{0, 1}, {1, 0}, {0, 1}}).size(), 1u);
  EXPECT_THROW(make_graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(make_graph(3, {{1, 1}}), std::invalid_argument);
  try {
    make_graph(3, {{0, 3}});
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(0, 3)"), std::string::npos) << e.what();
  }
}

TEST(MakeGraph, Factories) {
  EXPECT_EQ(Graph::cycle(5).size(), 5u);
  EXPECT_EQ(Graph::star(4).order(), 5u);
  EXPECT_EQ(Graph::star(4).degree(0), 4u);
  EXPECT_EQ(Graph::empty(6).size(), 0u);
  EXPECT_EQ(Graph::complete(7).max_degree(), 6u);
}

TEST(InducedEdgeCount, Examples) {
  const Graph k4 = Graph::complete(4);
  EXPECT_EQ(induced_edge_count(k4, std::vector<Vertex>{0, 2, 3}), 3u);
  EXPECT_EQ(induced_edge_count(k4, VertexSet(4)), 0u);
  EXPECT_EQ(induced_edge_count(Graph::path(3), std::vector<Vertex>{0, 1, 2}), 2u);
  EXPECT_THROW(induced_edge_count(k4, std::vector<Vertex>{0, 4}), std::out_of_range);
}

TEST(Serialize, FormatAndRoundTrip) {
  EXPECT_EQ(serialize(Graph::path(3)), "3 2\n0 1\n1 2\n");
  const Graph k4 = Graph::complete(4);
  EXPECT_EQ(parse(serialize(k4)), k4);
  const std::string text = "5 3\n0 4\n1 2\n3 4\n";
  EXPECT_EQ(serialize(parse(text)), text);
  EXPECT_EQ(serialize(Graph::empty(0)), "0 0\n");
}

TEST(Parse, RejectsMalformedInput) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 1\n0 5\n"), 2u);      // endpoint out of range
  EXPECT_EQ(line_of("3 2\n0 1\n0 1\n"), 3u); // duplicate
  EXPECT_EQ(line_of("3 1\n1 0\n"), 2u);      // u >= v
  EXPECT_EQ(line_of("3 2\n1 2\n0 1\n"), 3u); // not sorted
  EXPECT_EQ(line_of("3 1\nx y\n"), 2u);      // malformed
  EXPECT_EQ(line_of("three\n"), 1u);         // bad header
  EXPECT_NE(line_of("3 2\n0 1\n"), 0u);      // count mismatch
  EXPECT_THROW(parse("3 1\n0 5\n"), ParseError);
}

TEST(SampleGnp, ExtremesAndDeterminism) {
  EXPECT_EQ(sample_gnp(10, 0.0, Seed{1, 2}).size(), 0u);
  EXPECT_EQ(sample_gnp(10, 1.0, Seed{1, 2}).size(), 45u);
  EXPECT_EQ(sample_gnp(40, 0.3, Seed{5, 6}), sample_gnp(40, 0.3, Seed{5, 6}));
  EXPECT_NE(sample_gnp(40, 0.3, Seed{5, 6}), sample_gnp(40, 0.3, Seed{5, 7}));
  EXPECT_THROW(sample_gnp(5, 1.5, Seed{}), std::invalid_argument);
  EXPECT_THROW(sample_gnp(5, -0.1, Seed{}), std::invalid_argument);
}

TEST(SampleGnp, PairRankMapping) {
  // Pair of lexicographic rank i is present iff uniform(i) < p.
  const Seed seed{77, 3};
  const Graph g = sample_gnp(12, 0.4, seed);
  std::uint64_t rank = 0;
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v, ++rank) EXPECT_EQ(g.adjacent(u, v), seed.uniform(rank) < 0.4);
}

TEST(SampleGnp, MeanEdgeCount) {
  const std::size_t trials = 1000;
  double sum = 0, sum_sq = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double m = static_cast<double>(sample_gnp(30, 0.5, Seed{2024, 0}.derive(t)).size());
    sum += m;
    sum_sq += m * m;
  }
  const double mean = sum / trials;
  const double var = (sum_sq - trials * mean * mean) / (trials - 1);
  const double se = std::sqrt(var / trials);
  EXPECT_LE(std::abs(mean - 217.5), 4 * se) << "mean " << mean << " se " << se;
}

TEST(Graph, InducedAndSpanning) {
  const Graph k5 = Graph::complete(5);
  const Graph sub = k5.induced_on(VertexSet::from_list(5, {0, 1, 2}));
  EXPECT_EQ(sub.order(), 5u);
  EXPECT_EQ(sub.size(), 3u);
  EXPECT_TRUE(sub.is_spanning_subgraph_of(k5));
  EXPECT_FALSE(k5.is_spanning_subgraph_of(sub));
  const auto edges = k5.edges();
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}
