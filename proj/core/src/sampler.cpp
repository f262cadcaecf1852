#include "lohi/sampler.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "lohi/potts.hpp"
#include "lohi/random.hpp"

namespace lohi {

LabeledGraph gibbs_sample(const Graph& g, const SamplerConfig& cfg) {
  if (!(cfg.beta >= 0.0) || !std::isfinite(cfg.beta)) {
    throw std::invalid_argument("sampler beta must be finite and >= 0");
  }
  if (cfg.q < 2) throw std::invalid_argument("sampler needs q >= 2");
  if (cfg.sweeps < 1 || cfg.burn_in < 0 || cfg.burn_in >= cfg.sweeps) {
    throw std::invalid_argument("sampler needs sweeps > burn_in >= 0");
  }

  Rng rng(cfg.seed);
  const std::size_t n = g.node_count();
  const auto q = static_cast<std::size_t>(cfg.q);
  std::vector<Label> labels(n);
  for (auto& x : labels) x = static_cast<Label>(rng.below(q)) + 1;

  std::vector<int> histogram(q);
  for (int sweep = 0; sweep < cfg.sweeps; ++sweep) {
    for (NodeId i = 0; i < n; ++i) {
      std::fill(histogram.begin(), histogram.end(), 0);
      for (NodeId j : g.neighbors(i)) ++histogram[static_cast<std::size_t>(labels[j] - 1)];
      const auto p = local_distribution(histogram, cfg.beta);
      double r = rng.uniform();
      std::size_t pick = q - 1;
      for (std::size_t l = 0; l < q; ++l) {
        if (r < p[l]) {
          pick = l;
          break;
        }
        r -= p[l];
      }
      labels[i] = static_cast<Label>(pick) + 1;
    }
  }
  return LabeledGraph(g, std::move(labels), cfg.q);
}

Graph grid_graph(int rows, int cols, bool torus) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("grid needs rows, cols >= 2");
  auto id = [cols](int r, int c) { return static_cast<NodeId>(r * cols + c); };
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        edges.emplace_back(id(r, c), id(r, c + 1));
      } else if (torus) {
        edges.emplace_back(id(r, c), id(r, 0));
      }
      if (r + 1 < rows) {
        edges.emplace_back(id(r, c), id(r + 1, c));
      } else if (torus) {
        edges.emplace_back(id(r, c), id(0, c));
      }
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(rows * cols), edges);
}

Graph planted_partition_graph(int nodes, int edges, int communities, double p_in,
                              std::uint64_t seed) {
  if (nodes < 2 || communities < 1 || communities > nodes || edges < 0) {
    throw std::invalid_argument("invalid planted partition parameters");
  }
  const auto n = static_cast<std::uint64_t>(nodes);
  const auto k = static_cast<std::uint64_t>(communities);
  if (static_cast<std::uint64_t>(edges) > n * (n - 1) / 2) {
    throw std::invalid_argument("more edges requested than node pairs");
  }
  Rng rng(seed);
  std::set<std::pair<NodeId, NodeId>> chosen;
  // Each group is {g, g + k, g + 2k, ...}.
  auto group_size = [&](std::uint64_t grp) { return (n - grp + k - 1) / k; };
  std::size_t attempts = 0;
  while (chosen.size() < static_cast<std::size_t>(edges)) {
    if (++attempts > 1000 * static_cast<std::size_t>(edges) + 1000) {
      throw std::invalid_argument("could not place the requested number of edges");
    }
    NodeId a;
    NodeId b;
    if (k > 1 && rng.uniform() >= p_in) {
      a = rng.below(n);
      b = rng.below(n);
      if (a % k == b % k) continue;
    } else {
      const std::uint64_t grp = rng.below(k);
      const std::uint64_t size = group_size(grp);
      if (size < 2) continue;
      a = grp + k * rng.below(size);
      b = grp + k * rng.below(size);
    }
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<std::pair<NodeId, NodeId>> list(chosen.begin(), chosen.end());
  return Graph::from_edges(static_cast<std::size_t>(nodes), list);
}

}  // namespace lohi
