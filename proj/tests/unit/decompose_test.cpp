#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <random>

#include "lohi/decompose.hpp"
#include "lohi/fisher.hpp"
#include "oracles.hpp"

namespace lohi {
namespace {

LabeledGraph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  std::vector<Label> labels(n);
  for (NodeId i = 0; i < n; ++i) labels[i] = 1 + static_cast<Label>(i % 2);
  return LabeledGraph(Graph::from_edges(n, edges), std::move(labels), 2);
}

TEST(QuantileThreshold, NearestRank) {
  const std::vector<double> s{1.0, 0.25, 0.0, 0.75, 0.5};
  EXPECT_EQ(quantile_threshold(s, 0.75), 0.75);
  EXPECT_EQ(quantile_threshold(std::vector<double>{0.3, 0.3, 0.3}, 0.75), 0.3);
  EXPECT_EQ(quantile_threshold(std::vector<double>{0.42}, 0.1), 0.42);
  EXPECT_EQ(quantile_threshold(std::vector<double>{0.42}, 0.99), 0.42);
}

TEST(QuantileThreshold, Errors) {
  EXPECT_THROW(quantile_threshold(std::vector<double>{}, 0.5), std::invalid_argument);
  EXPECT_THROW(quantile_threshold(std::vector<double>{0.1}, 0.0), std::invalid_argument);
  EXPECT_THROW(quantile_threshold(std::vector<double>{0.1}, 1.0), std::invalid_argument);
}

TEST(Decompose, EightNodeExample) {
  const auto g = path_graph(8);
  const std::vector<double> s{0, .1, .2, .3, .4, .5, .9, 1};
  const auto d = decompose_by_scores(g, s, 0.75);
  EXPECT_EQ(d.threshold, 0.5);
  EXPECT_EQ(d.high_nodes, NodeSet({5, 6, 7}));
  EXPECT_EQ(d.low_nodes.size(), 5u);
  EXPECT_EQ(d.high.graph.graph().edge_count(), 2u);
  EXPECT_EQ(d.low.graph.graph().edge_count(), 4u);
  const auto split = classify_edges(g.graph(), d);
  EXPECT_EQ(split.low_internal, 4u);
  EXPECT_EQ(split.high_internal, 2u);
  EXPECT_EQ(split.cut, 1u);
}

TEST(Decompose, ConstantScoresGoLowWithWarning) {
  const auto g = path_graph(6);
  const auto d = decompose_by_scores(g, std::vector<double>(6, 0.0), 0.75);
  EXPECT_TRUE(d.high_nodes.empty());
  EXPECT_EQ(d.low_nodes.size(), 6u);
  EXPECT_FALSE(d.warnings.empty());
}

TEST(Decompose, RejectsBadInput) {
  const auto g = path_graph(3);
  EXPECT_THROW(decompose_by_scores(g, std::vector<double>{0.1, 0.2}, 0.75), std::invalid_argument);
  EXPECT_THROW(decompose_by_scores(g, std::vector<double>{0.1, 0.2, 0.3}, 1.5),
               std::invalid_argument);
}

TEST(Decompose, DistinctScoresGiveExpectedHighCount) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 80;
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<double>(i) / static_cast<double>(n);
    std::shuffle(s.begin(), s.end(), rng);
    const auto d = decompose_by_scores(path_graph(n), s, p);
    const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    const std::size_t want = n == 1 ? 0 : n - rank + 1;  // one node is a constant field
    EXPECT_EQ(d.high_nodes.size(), want);
  }
}

TEST(Decompose, FuzzedInvariants) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const auto g = testing::random_labeled_graph(rng, n, 0.15, 2 + static_cast<int>(rng() % 5));
    const double beta = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const auto info = node_information(g, beta);
    const auto d = lohi_decompose(g, info, p);

    EXPECT_EQ(d.low_nodes.size() + d.high_nodes.size(), n);
    for (NodeId i : d.high_nodes) {
      EXPECT_FALSE(d.low_nodes.contains(i));
      EXPECT_GE(info[i].shape_normalized, d.threshold);
    }
    if (!d.high_nodes.empty()) {
      for (NodeId i : d.low_nodes) EXPECT_LT(info[i].shape_normalized, d.threshold);
    }
    const auto split = classify_edges(g.graph(), d);
    EXPECT_EQ(split.low_internal, d.low.graph.graph().edge_count());
    EXPECT_EQ(split.high_internal, d.high.graph.graph().edge_count());
    EXPECT_EQ(split.low_internal + split.high_internal + split.cut, g.graph().edge_count());

    std::vector<double> raw;
    std::vector<double> scaled;
    for (const auto& ni : info) {
      raw.push_back(ni.shape);
      scaled.push_back(std::ldexp(ni.shape, -5) + 0.0);
    }
    EXPECT_EQ(decompose_by_scores(g, raw, p).high_nodes, d.high_nodes);
    EXPECT_EQ(decompose_by_scores(g, scaled, p).high_nodes, d.high_nodes);
  }
}

}  // namespace
}  // namespace lohi
