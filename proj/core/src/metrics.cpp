#include "lohi/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lohi {

namespace {

void require_match(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) {
    throw std::invalid_argument("partition covers " + std::to_string(p.node_count()) +
                                " nodes, graph has " + std::to_string(g.node_count()));
  }
}

std::size_t intra_edges(const Graph& g, const Partition& p) {
  std::size_t intra = 0;
  for (const auto& e : g.edges()) {
    if (p.community(e.u) == p.community(e.v)) ++intra;
  }
  return intra;
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
  require_match(g, p);
  const auto m = static_cast<double>(g.edge_count());
  if (m == 0) throw std::domain_error("modularity is undefined on an edgeless graph");

  std::vector<double> internal(static_cast<std::size_t>(p.count()) + 1, 0.0);
  std::vector<double> degree(internal.size(), 0.0);
  for (const auto& e : g.edges()) {
    if (p.community(e.u) == p.community(e.v)) internal[static_cast<std::size_t>(p.community(e.u))] += 1;
  }
  for (NodeId i = 0; i < g.node_count(); ++i) {
    degree[static_cast<std::size_t>(p.community(i))] += static_cast<double>(g.degree(i));
  }
  double q = 0.0;
  for (std::size_t c = 1; c < internal.size(); ++c) {
    const double share = degree[c] / (2.0 * m);
    q += internal[c] / m - share * share;
  }
  return q;
}

double coverage(const Graph& g, const Partition& p) {
  require_match(g, p);
  if (g.edge_count() == 0) throw std::domain_error("coverage is undefined on an edgeless graph");
  return static_cast<double>(intra_edges(g, p)) / static_cast<double>(g.edge_count());
}

double performance(const Graph& g, const Partition& p) {
  require_match(g, p);
  const std::size_t n = g.node_count();
  if (n < 2) throw std::domain_error("performance needs at least 2 nodes");

  std::vector<std::size_t> sizes(static_cast<std::size_t>(p.count()) + 1, 0);
  for (NodeId i = 0; i < n; ++i) ++sizes[static_cast<std::size_t>(p.community(i))];
  const std::size_t pairs = n * (n - 1) / 2;
  std::size_t intra_pairs = 0;
  for (std::size_t s : sizes) intra_pairs += s * (s > 0 ? s - 1 : 0) / 2;
  const std::size_t inter_pairs = pairs - intra_pairs;

  const std::size_t intra = intra_edges(g, p);
  const std::size_t inter_edges = g.edge_count() - intra;
  const std::size_t inter_non_edges = inter_pairs - inter_edges;
  return static_cast<double>(intra + inter_non_edges) / static_cast<double>(pairs);
}

double conductance(const Graph& g, const NodeSet& s) {
  const NodeSet rest = NodeSet::complement(s, g.node_count());
  for (NodeId i : s) {
    if (i >= g.node_count()) throw std::out_of_range("node id " + std::to_string(i) + " out of range");
  }
  if (s.empty() || rest.empty()) throw std::domain_error("conductance needs two non-empty sides");
  const std::size_t denom = std::min(volume(g, s), volume(g, rest));
  if (denom == 0) throw std::domain_error("conductance is undefined for a zero-volume side");
  return static_cast<double>(cut_size(g, s)) / static_cast<double>(denom);
}

double max_pairwise_community_conductance(const Graph& g, const Partition& p) {
  require_match(g, p);
  if (p.count() < 2) throw std::domain_error("pairwise conductance needs at least 2 communities");

  std::vector<NodeSet> members;
  for (int c = 1; c <= p.count(); ++c) members.push_back(p.members(c));

  double best = 0.0;
  bool any = false;
  for (int a = 1; a <= p.count(); ++a) {
    for (int b = a + 1; b <= p.count(); ++b) {
      std::vector<NodeId> both(members[a - 1].begin(), members[a - 1].end());
      both.insert(both.end(), members[b - 1].begin(), members[b - 1].end());
      const Subgraph sub = induced_subgraph(g, NodeSet(std::move(both)));

      std::vector<NodeId> side;
      for (NodeId i = 0; i < sub.to_parent.size(); ++i) {
        if (p.community(sub.to_parent[i]) == a) side.push_back(i);
      }
      const NodeSet s(std::move(side));
      const NodeSet rest = NodeSet::complement(s, sub.graph.node_count());
      if (std::min(volume(sub.graph, s), volume(sub.graph, rest)) == 0) continue;
      best = std::max(best, conductance(sub.graph, s));
      any = true;
    }
  }
  return any ? best : 0.0;
}

PartitionReport evaluate_partition(const Graph& g, const Partition& p) {
  require_match(g, p);
  PartitionReport r;
  r.nodes = g.node_count();
  r.edges = g.edge_count();
  r.communities = p.count();
  if (g.edge_count() > 0) {
    r.modularity = modularity(g, p);
    r.coverage = coverage(g, p);
  }
  if (g.node_count() >= 2) r.performance = performance(g, p);
  if (p.count() >= 2) r.conductance_pairwise_max = max_pairwise_community_conductance(g, p);
  return r;
}

}  // namespace lohi
