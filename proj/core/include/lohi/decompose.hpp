#pragma once

#include <span>
#include <string>
#include <vector>

#include "lohi/fisher.hpp"
#include "lohi/graph.hpp"

namespace lohi {

inline constexpr double kDefaultQuantile = 0.75;

// Nearest-rank quantile: the ceil(p*n)-th smallest score (1-based).
// Throws std::invalid_argument on an empty list or p outside (0, 1).
double quantile_threshold(std::span<const double> scores, double p);

// Split of the node set at the score threshold: high-information nodes have
// score >= threshold, the rest are low-information.
struct Decomposition {
  double threshold = 0.0;
  double quantile = kDefaultQuantile;
  NodeSet low_nodes;
  NodeSet high_nodes;
  LabeledSubgraph low;
  LabeledSubgraph high;
  std::vector<std::string> warnings;
};

// Decomposition driven by shape_normalized.
Decomposition lohi_decompose(const LabeledGraph& g, std::span<const NodeInformation> info,
                             double p = kDefaultQuantile);

// Same split for an arbitrary per-node score. When every score is equal the
// high set is empty and everything goes to the low side.
Decomposition decompose_by_scores(const LabeledGraph& g, std::span<const double> scores,
                                  double p = kDefaultQuantile);

struct EdgeSplit {
  std::size_t low_internal = 0;
  std::size_t high_internal = 0;
  std::size_t cut = 0;
};

EdgeSplit classify_edges(const Graph& g, const Decomposition& d);

}  // namespace lohi
