#include "lohi/partition.hpp"

#include <unordered_map>

namespace lohi {

Partition Partition::from_ids(std::span<const int> ids) {
  Partition p;
  p.community_.reserve(ids.size());
  std::unordered_map<int, int> remap;
  for (int id : ids) {
    auto [it, inserted] = remap.try_emplace(id, p.count_ + 1);
    if (inserted) ++p.count_;
    p.community_.push_back(it->second);
  }
  return p;
}

Partition Partition::singletons(std::size_t node_count) {
  Partition p;
  p.community_.resize(node_count);
  for (std::size_t i = 0; i < node_count; ++i) p.community_[i] = static_cast<int>(i) + 1;
  p.count_ = static_cast<int>(node_count);
  return p;
}

Partition Partition::single(std::size_t node_count) {
  Partition p;
  p.community_.assign(node_count, 1);
  p.count_ = node_count > 0 ? 1 : 0;
  return p;
}

NodeSet Partition::members(int c) const {
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < community_.size(); ++i) {
    if (community_[i] == c) ids.push_back(i);
  }
  return NodeSet(std::move(ids));
}

}  // namespace lohi
