#include "lohi/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lohi {

double quantile_threshold(std::span<const double> scores, double p) {
  if (scores.empty()) throw std::invalid_argument("quantile of an empty score list");
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("quantile must lie in (0, 1), got " + std::to_string(p));
  }
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(sorted.size())));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

Decomposition decompose_by_scores(const LabeledGraph& g, std::span<const double> scores,
                                  double p) {
  if (scores.size() != g.node_count()) {
    throw std::invalid_argument("score count " + std::to_string(scores.size()) +
                                " does not match node count " +
                                std::to_string(g.node_count()));
  }
  Decomposition d;
  d.quantile = p;
  if (scores.empty()) {
    if (!(p > 0.0 && p < 1.0)) {
      throw std::invalid_argument("quantile must lie in (0, 1), got " + std::to_string(p));
    }
    d.warnings.push_back("graph has no nodes; both sides are empty");
  } else {
    d.threshold = quantile_threshold(scores, p);
  }

  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  const bool constant = scores.empty() || *lo == *hi;

  std::vector<NodeId> low;
  std::vector<NodeId> high;
  for (NodeId i = 0; i < scores.size(); ++i) {
    if (!constant && scores[i] >= d.threshold) {
      high.push_back(i);
    } else {
      low.push_back(i);
    }
  }
  if (constant && !scores.empty()) {
    d.warnings.push_back("all node scores are equal; every node is low-information and the "
                         "H-subgraph is empty");
  }
  d.low_nodes = NodeSet(std::move(low));
  d.high_nodes = NodeSet(std::move(high));
  d.low = induced_subgraph(g, d.low_nodes);
  d.high = induced_subgraph(g, d.high_nodes);
  return d;
}

Decomposition lohi_decompose(const LabeledGraph& g, std::span<const NodeInformation> info,
                             double p) {
  std::vector<double> scores;
  scores.reserve(info.size());
  for (const auto& n : info) scores.push_back(n.shape_normalized);
  return decompose_by_scores(g, scores, p);
}

EdgeSplit classify_edges(const Graph& g, const Decomposition& d) {
  EdgeSplit s;
  for (const auto& e : g.edges()) {
    const bool hu = d.high_nodes.contains(e.u);
    const bool hv = d.high_nodes.contains(e.v);
    if (hu && hv) {
      ++s.high_internal;
    } else if (!hu && !hv) {
      ++s.low_internal;
    } else {
      ++s.cut;
    }
  }
  return s;
}

}  // namespace lohi
