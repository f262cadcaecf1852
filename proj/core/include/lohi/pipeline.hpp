#pragma once

#include <string>
#include <vector>

#include "lohi/decompose.hpp"
#include "lohi/fisher.hpp"
#include "lohi/metrics.hpp"
#include "lohi/potts.hpp"

namespace lohi {

struct PipelineConfig {
  EstimationConfig estimation;
  FisherOptions fisher;
  double quantile = kDefaultQuantile;
};

struct PipelineResult {
  EstimationResult estimation;
  std::vector<NodeInformation> info;
  Decomposition decomposition;
  PartitionReport original;  // carries conductance_lh
  PartitionReport low;
  PartitionReport high;
  std::vector<std::string> warnings;
};

// Beta estimation and clamping, per-node curvature, quantile split, and the
// partition metrics of the original graph and both induced subgraphs.
PipelineResult run_lohi(const LabeledGraph& g, const PipelineConfig& config = {});

}  // namespace lohi
