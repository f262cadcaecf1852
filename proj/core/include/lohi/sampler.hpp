#pragma once

#include <cstdint>

#include "lohi/graph.hpp"

namespace lohi {

struct SamplerConfig {
  double beta = 0.0;
  int q = 2;
  int sweeps = 500;
  int burn_in = 0;
  std::uint64_t seed = 1;
};

// Heat-bath Gibbs sampler for the isotropic Potts model. Starts from
// uniform random labels and performs `sweeps` raster-order passes, drawing
// each site from its conditional given the current neighbors. `burn_in` only
// has to satisfy 0 <= burn_in < sweeps; the final configuration is returned.
// Deterministic in cfg.seed. Throws std::invalid_argument on a bad config.
LabeledGraph gibbs_sample(const Graph& g, const SamplerConfig& cfg);

// 4-neighbour lattice, row-major ids; torus wraps both directions.
// Throws std::invalid_argument unless rows, cols >= 2.
Graph grid_graph(int rows, int cols, bool torus);

// Random graph with `communities` near-equal planted groups (node i in group
// i % communities) and exactly `edges` distinct edges, each drawn inside a
// group with probability p_in and across groups otherwise. Deterministic in
// seed.
Graph planted_partition_graph(int nodes, int edges, int communities, double p_in,
                              std::uint64_t seed);

}  // namespace lohi
