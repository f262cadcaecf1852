#include "lohi/pipeline.hpp"

#include <algorithm>

#include "lohi/partition.hpp"

namespace lohi {

PipelineResult run_lohi(const LabeledGraph& g, const PipelineConfig& config) {
  PipelineResult r;
  r.estimation = estimate_beta(g, config.estimation);
  r.info = node_information(g, r.estimation.beta_used, config.fisher);
  r.decomposition = lohi_decompose(g, r.info, config.quantile);

  r.original = evaluate_partition(g.graph(), Partition::from_labels(g));
  r.low = evaluate_partition(r.decomposition.low.graph.graph(),
                             Partition::from_labels(r.decomposition.low.graph));
  r.high = evaluate_partition(r.decomposition.high.graph.graph(),
                              Partition::from_labels(r.decomposition.high.graph));

  const auto& d = r.decomposition;
  if (!d.low_nodes.empty() && !d.high_nodes.empty() &&
      std::min(volume(g.graph(), d.low_nodes), volume(g.graph(), d.high_nodes)) > 0) {
    r.original.conductance_lh = conductance(g.graph(), d.high_nodes);
  }

  r.warnings = r.estimation.warnings;
  r.warnings.insert(r.warnings.end(), d.warnings.begin(), d.warnings.end());
  return r;
}

}  // namespace lohi
