#include "lohi/community.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "lohi/error.hpp"

namespace lohi {

Partition detect_communities_cnm(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto m = static_cast<std::int64_t>(g.edge_count());
  if (m == 0) throw std::domain_error("community detection needs at least one edge");

  // Community c is identified by its smallest node id. links[c][d] counts
  // edges between c and d; the modularity gain of merging them is
  // (2m * links - deg_c * deg_d) / (2m^2), so the integer numerator orders
  // merges exactly.
  std::vector<std::map<NodeId, std::int64_t>> links(n);
  std::vector<std::int64_t> deg(n);
  std::vector<NodeId> owner(n);
  std::vector<bool> active(n, true);
  for (NodeId i = 0; i < n; ++i) {
    deg[i] = static_cast<std::int64_t>(g.degree(i));
    owner[i] = i;
  }
  for (const auto& e : g.edges()) {
    links[e.u][e.v] = 1;
    links[e.v][e.u] = 1;
  }

  while (true) {
    std::int64_t best = 0;
    NodeId keep = 0;
    NodeId gone = 0;
    bool found = false;
    for (NodeId c = 0; c < n; ++c) {
      if (!active[c]) continue;
      for (auto it = links[c].upper_bound(c); it != links[c].end(); ++it) {
        const std::int64_t gain = 2 * m * it->second - deg[c] * deg[it->first];
        if (gain > best) {
          best = gain;
          keep = c;
          gone = it->first;
          found = true;
        }
      }
    }
    if (!found) break;

    for (const auto& [other, count] : links[gone]) {
      if (other == keep) continue;
      links[keep][other] += count;
      links[other][keep] += count;
      links[other].erase(gone);
    }
    links[keep].erase(gone);
    links[gone].clear();
    deg[keep] += deg[gone];
    active[gone] = false;
    for (NodeId i = 0; i < n; ++i) {
      if (owner[i] == gone) owner[i] = keep;
    }
  }

  std::vector<int> ids(n);
  for (NodeId i = 0; i < n; ++i) ids[i] = static_cast<int>(owner[i]);
  return Partition::from_ids(ids);
}

LabeledGraph partition_to_labels(const Partition& p, const Graph& g) {
  if (p.node_count() != g.node_count()) {
    throw DataError("partition covers " + std::to_string(p.node_count()) +
                    " nodes, graph has " + std::to_string(g.node_count()));
  }
  if (p.count() < 2) {
    throw DataError("partition has " + std::to_string(p.count()) +
                    " community; the Potts analysis needs at least 2");
  }
  return LabeledGraph(g, std::vector<Label>(p.communities().begin(), p.communities().end()),
                      p.count());
}

}  // namespace lohi
