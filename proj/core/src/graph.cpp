#include "lohi/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lohi/error.hpp"

namespace lohi {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges,
                        EdgeCleanup* cleanup) {
  Graph g(node_count);
  EdgeCleanup dropped;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= node_count || b >= node_count) {
      throw std::out_of_range("edge endpoint " + std::to_string(std::max(a, b)) +
                              " out of range for " + std::to_string(node_count) +
                              " nodes");
    }
    if (a == b) {
      ++dropped.self_loops;
      continue;
    }
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto last = std::unique(g.edges_.begin(), g.edges_.end());
  dropped.duplicates = static_cast<std::size_t>(g.edges_.end() - last);
  g.edges_.erase(last, g.edges_.end());

  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  if (cleanup) *cleanup = dropped;
  return g;
}

void Graph::check(NodeId i) const {
  if (i >= adjacency_.size()) {
    throw std::out_of_range("node id " + std::to_string(i) + " out of range for " +
                            std::to_string(adjacency_.size()) + " nodes");
  }
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check(i);
  return adjacency_[i];
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  auto nbrs = neighbors(a);
  check(b);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

NodeSet::NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet NodeSet::all(std::size_t node_count) {
  std::vector<NodeId> ids(node_count);
  for (std::size_t i = 0; i < node_count; ++i) ids[i] = i;
  return NodeSet(std::move(ids));
}

NodeSet NodeSet::complement(const NodeSet& s, std::size_t node_count) {
  std::vector<NodeId> ids;
  ids.reserve(node_count >= s.size() ? node_count - s.size() : 0);
  for (NodeId i = 0; i < node_count; ++i) {
    if (!s.contains(i)) ids.push_back(i);
  }
  return NodeSet(std::move(ids));
}

bool NodeSet::contains(NodeId i) const {
  return std::binary_search(ids_.begin(), ids_.end(), i);
}

LabeledGraph::LabeledGraph(Graph graph, std::vector<Label> labels, int q)
    : graph_(std::move(graph)), labels_(std::move(labels)), q_(q) {
  if (q_ < 2) {
    throw DataError("a Potts labeling needs at least 2 states, got q = " +
                    std::to_string(q_));
  }
  if (labels_.size() != graph_.node_count()) {
    throw DataError("label count " + std::to_string(labels_.size()) +
                    " does not match node count " +
                    std::to_string(graph_.node_count()));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 1 || labels_[i] > q_) {
      throw DataError("label " + std::to_string(labels_[i]) + " of node " +
                      std::to_string(i) + " outside 1.." + std::to_string(q_));
    }
  }
}

NeighborHistogram neighbor_histogram(const LabeledGraph& g, NodeId i) {
  NeighborHistogram u(static_cast<std::size_t>(g.q()), 0);
  for (NodeId j : g.graph().neighbors(i)) ++u[static_cast<std::size_t>(g.label(j) - 1)];
  return u;
}

std::vector<NeighborHistogram> neighbor_histograms(const LabeledGraph& g) {
  std::vector<NeighborHistogram> out;
  out.reserve(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) out.push_back(neighbor_histogram(g, i));
  return out;
}

namespace {

std::optional<NodeId> find_local(const std::vector<NodeId>& to_parent, NodeId parent_id) {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_id);
  if (it == to_parent.end() || *it != parent_id) return std::nullopt;
  return static_cast<NodeId>(it - to_parent.begin());
}

}  // namespace

std::optional<NodeId> Subgraph::local_id(NodeId parent_id) const {
  return find_local(to_parent, parent_id);
}

std::optional<NodeId> LabeledSubgraph::local_id(NodeId parent_id) const {
  return find_local(to_parent, parent_id);
}

Subgraph induced_subgraph(const Graph& g, const NodeSet& s) {
  const std::size_t n = g.node_count();
  for (NodeId i : s) {
    if (i >= n) {
      throw std::out_of_range("node id " + std::to_string(i) + " out of range for " +
                              std::to_string(n) + " nodes");
    }
  }
  std::vector<NodeId> to_parent(s.begin(), s.end());
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : g.edges()) {
    auto a = find_local(to_parent, e.u);
    if (!a) continue;
    auto b = find_local(to_parent, e.v);
    if (!b) continue;
    edges.emplace_back(*a, *b);
  }
  return {Graph::from_edges(to_parent.size(), edges), std::move(to_parent)};
}

LabeledSubgraph induced_subgraph(const LabeledGraph& g, const NodeSet& s) {
  Subgraph sub = induced_subgraph(g.graph(), s);
  std::vector<Label> labels;
  labels.reserve(sub.to_parent.size());
  for (NodeId p : sub.to_parent) labels.push_back(g.label(p));
  return {LabeledGraph(std::move(sub.graph), std::move(labels), g.q()),
          std::move(sub.to_parent)};
}

std::size_t volume(const Graph& g, const NodeSet& s) {
  std::size_t total = 0;
  for (NodeId i : s) total += g.degree(i);
  return total;
}

std::size_t cut_size(const Graph& g, const NodeSet& s) {
  std::size_t cut = 0;
  for (NodeId i : s) {
    for (NodeId j : g.neighbors(i)) {
      if (!s.contains(j)) ++cut;
    }
  }
  return cut;
}

}  // namespace lohi
