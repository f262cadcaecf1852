#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lohi/community.hpp"
#include "lohi/error.hpp"
#include "lohi/ingest.hpp"
#include "lohi/metrics.hpp"
#include "oracles.hpp"

namespace lohi {
namespace {

using Pairs = std::vector<std::pair<NodeId, NodeId>>;

const std::filesystem::path kData = LOHI_DATA_DIR;

Graph two_triangles_with_bridge() {
  return Graph::from_edges(6, Pairs{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Best modularity over every set partition of a small graph.
double best_modularity(const Graph& g) {
  const auto a = testing::adjacency(g);
  double best = -1.0;
  for (const auto& ids : testing::all_partitions(g.node_count())) {
    best = std::max(best, *testing::modularity_oracle(a, ids));
  }
  return best;
}

TEST(Cnm, TwoTrianglesSplitAtTheBridge) {
  const Graph g = two_triangles_with_bridge();
  const Partition p = detect_communities_cnm(g);
  EXPECT_EQ(p, Partition::from_ids(std::vector<int>{1, 1, 1, 2, 2, 2}));
  EXPECT_NEAR(modularity(g, p), best_modularity(g), 1e-12);
}

TEST(Cnm, CompleteGraphStaysWhole) {
  Pairs e;
  for (NodeId i = 0; i < 5; ++i) {
    for (NodeId j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  }
  const Graph k5 = Graph::from_edges(5, e);
  const Partition p = detect_communities_cnm(k5);
  EXPECT_EQ(p.count(), 1);
  EXPECT_NEAR(modularity(k5, p), 0.0, 1e-15);
}

TEST(Cnm, RejectsEdgelessGraph) { EXPECT_THROW(detect_communities_cnm(Graph(4)), std::domain_error); }

TEST(Cnm, TiesGoToTheSmallestPair) {
  // A 4-cycle: every first merge has the same gain; the lexicographically
  // smallest pair (0, 1) merges first, then (2, 3).
  const Graph c4 = Graph::from_edges(4, Pairs{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(detect_communities_cnm(c4), Partition::from_ids(std::vector<int>{1, 1, 2, 2}));
}

TEST(Cnm, KarateFindsThreeCommunities) {
  const NamedGraph g = read_edge_list(kData / "karate.edges");
  const Partition p = detect_communities_cnm(g.graph);
  EXPECT_EQ(p.count(), 3);
  EXPECT_NEAR(coverage(g.graph, p), 0.756, 0.001);
  // Unweighted value; the weighted karate graph gives 0.410 for this partition.
  EXPECT_NEAR(modularity(g.graph, p), 0.3807, 0.0001);
}

TEST(Cnm, DeterministicAndNotWorseThanSingletons) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_labeled_graph(rng, 5 + trial, 0.2, 2).graph();
    if (g.edge_count() == 0) continue;
    const Partition p = detect_communities_cnm(g);
    EXPECT_EQ(p, detect_communities_cnm(g));
    EXPECT_GE(modularity(g, p), modularity(g, Partition::singletons(g.node_count())));
    EXPECT_GE(modularity(g, p), 0.0);
  }
}

TEST(Cnm, MatchesOptimumOnSmallGraphsOften) {
  // Greedy merging is not exact, but on tiny graphs it is rarely far off.
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_labeled_graph(rng, 7, 0.4, 2).graph();
    if (g.edge_count() == 0) continue;
    EXPECT_GE(modularity(g, detect_communities_cnm(g)), best_modularity(g) - 0.1);
  }
}

TEST(PartitionToLabels, Examples) {
  const Graph p4 = Graph::from_edges(4, Pairs{{0, 1}, {1, 2}, {2, 3}});
  const LabeledGraph g =
      partition_to_labels(Partition::from_ids(std::vector<int>{1, 1, 2, 2}), p4);
  EXPECT_EQ(g.q(), 2);
  EXPECT_EQ(std::vector<Label>(g.labels().begin(), g.labels().end()),
            (std::vector<Label>{1, 1, 2, 2}));
  EXPECT_THROW(partition_to_labels(Partition::single(4), p4), DataError);
  EXPECT_THROW(partition_to_labels(Partition::singletons(3), p4), DataError);
}

}  // namespace
}  // namespace lohi
