#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lohi/graph.hpp"

namespace lohi {

// Assignment of every node to one community. Community ids are contiguous,
// 1..count().
class Partition {
 public:
  Partition() = default;

  // Renumbers arbitrary integer ids to 1..q in order of first appearance by
  // node id.
  static Partition from_ids(std::span<const int> ids);
  static Partition from_labels(const LabeledGraph& g) { return from_ids(g.labels()); }
  static Partition singletons(std::size_t node_count);
  static Partition single(std::size_t node_count);

  std::size_t node_count() const { return community_.size(); }
  int count() const { return count_; }
  int community(NodeId i) const { return community_.at(i); }
  std::span<const int> communities() const { return community_; }

  // Members of community c (1-based), sorted.
  NodeSet members(int c) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> community_;
  int count_ = 0;
};

}  // namespace lohi
