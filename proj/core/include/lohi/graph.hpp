#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lohi {

using NodeId = std::size_t;
using Label = int;  // Potts state, 1..q

struct Edge {
  NodeId u;
  NodeId v;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// What Graph::from_edges threw away while building a simple graph.
struct EdgeCleanup {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

// Undirected simple graph with dense node ids 0..n-1. Immutable once built;
// adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  // Self-loops and repeated pairs (in either orientation) are dropped and
  // counted in `cleanup` when given. Throws std::out_of_range on an endpoint
  // >= node_count.
  static Graph from_edges(std::size_t node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges,
                          EdgeCleanup* cleanup = nullptr);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId i) const;
  std::size_t degree(NodeId i) const { return neighbors(i).size(); }
  bool has_edge(NodeId a, NodeId b) const;

  // Sorted (u, v) pairs with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  void check(NodeId i) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
};

// Sorted, deduplicated set of node ids. Validity against a particular graph
// is checked where the set is used.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> ids);

  static NodeSet all(std::size_t node_count);
  // Nodes of 0..node_count-1 not in `s`.
  static NodeSet complement(const NodeSet& s, std::size_t node_count);

  std::span<const NodeId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(NodeId i) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

// Count of neighbors carrying each label; entry l-1 holds U(l).
using NeighborHistogram = std::vector<int>;

// A graph whose nodes carry Potts states in {1..q}, q >= 2.
class LabeledGraph {
 public:
  // Empty graph (no nodes) with q = 2.
  LabeledGraph() = default;
  // Throws DataError if q < 2, the label vector has the wrong length, or a
  // label falls outside {1..q}.
  LabeledGraph(Graph graph, std::vector<Label> labels, int q);

  const Graph& graph() const { return graph_; }
  std::span<const Label> labels() const { return labels_; }
  Label label(NodeId i) const { return labels_.at(i); }
  int q() const { return q_; }
  std::size_t node_count() const { return graph_.node_count(); }

 private:
  Graph graph_;
  std::vector<Label> labels_;
  int q_ = 2;
};

NeighborHistogram neighbor_histogram(const LabeledGraph& g, NodeId i);
std::vector<NeighborHistogram> neighbor_histograms(const LabeledGraph& g);

// Induced subgraph with node ids renumbered 0..|s|-1 in the order of `s`.
// `to_parent[new_id]` is the id in the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<NodeId> to_parent;

  std::optional<NodeId> local_id(NodeId parent_id) const;
};

struct LabeledSubgraph {
  LabeledGraph graph;
  std::vector<NodeId> to_parent;

  std::optional<NodeId> local_id(NodeId parent_id) const;
};

Subgraph induced_subgraph(const Graph& g, const NodeSet& s);
// Labels are carried over unchanged and q is kept, so states absent from the
// subgraph simply have zero counts.
LabeledSubgraph induced_subgraph(const LabeledGraph& g, const NodeSet& s);

// Sum of degrees over `s`.
std::size_t volume(const Graph& g, const NodeSet& s);

// Edges with exactly one endpoint in `s`.
std::size_t cut_size(const Graph& g, const NodeSet& s);

}  // namespace lohi
