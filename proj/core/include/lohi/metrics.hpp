#pragma once

#include <optional>

#include "lohi/graph.hpp"
#include "lohi/partition.hpp"

namespace lohi {

// Newman modularity. Throws std::domain_error on an edgeless graph.
double modularity(const Graph& g, const Partition& p);

// Fraction of edges inside communities. Throws std::domain_error on an
// edgeless graph.
double coverage(const Graph& g, const Partition& p);

// (intra-community edges + inter-community non-edges) / (n choose 2).
// Throws std::domain_error for n < 2.
double performance(const Graph& g, const Partition& p);

// cut(s, complement) / min(vol(s), vol(complement)). Throws
// std::domain_error when either side is empty or has zero volume.
double conductance(const Graph& g, const NodeSet& s);

// Largest conductance of community a against community b, measured on the
// subgraph induced by a and b together, over all unordered pairs. Throws
// std::domain_error for fewer than two communities. Pairs whose conductance
// is undefined (a zero-volume side) are skipped.
double max_pairwise_community_conductance(const Graph& g, const Partition& p);

struct PartitionReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  int communities = 0;
  std::optional<double> modularity;
  std::optional<double> coverage;
  std::optional<double> performance;
  std::optional<double> conductance_pairwise_max;
  std::optional<double> conductance_lh;
};

// All metrics that are defined for (g, p); undefined ones are left empty.
PartitionReport evaluate_partition(const Graph& g, const Partition& p);

}  // namespace lohi
