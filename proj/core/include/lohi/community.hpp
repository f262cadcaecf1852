#pragma once

#include "lohi/graph.hpp"
#include "lohi/partition.hpp"

namespace lohi {

// Clauset-Newman-Moore greedy agglomeration. Starts from singletons and
// repeatedly merges the connected pair with the largest modularity gain until
// no merge has positive gain. Gains are compared exactly (integer keys); ties
// go to the lexicographically smallest (smaller id, larger id) pair. Output
// communities are numbered by their smallest node id. Throws
// std::domain_error on an edgeless graph.
Partition detect_communities_cnm(const Graph& g);

// Throws DataError when the partition has fewer than two communities or
// does not match the graph.
LabeledGraph partition_to_labels(const Partition& p, const Graph& g);

}  // namespace lohi
