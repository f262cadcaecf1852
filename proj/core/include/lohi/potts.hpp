#pragma once

#include <span>
#include <string>
#include <vector>

#include "lohi/graph.hpp"

namespace lohi {

// Conditional distribution of a node's state given its neighbor-label
// histogram: softmax(beta * U). Evaluated with the maximum subtracted, so any
// finite beta and histogram are safe.
std::vector<double> local_distribution(std::span<const int> histogram, double beta);

// p(x = m | neighbors, beta). Throws std::out_of_range if m is not in 1..q.
double local_probability(std::span<const int> histogram, Label m, double beta);

// Sum over nodes of log p(x_i | neighbors, beta).
double log_pseudo_likelihood(const LabeledGraph& g, double beta);

// d/dbeta of log_pseudo_likelihood: observed agreement minus expected
// agreement under the local conditionals.
double pl_derivative(const LabeledGraph& g, double beta);

// Same quantities over precomputed histograms (one per node) and labels.
double log_pseudo_likelihood(std::span<const NeighborHistogram> histograms,
                             std::span<const Label> labels, double beta);
double pl_derivative(std::span<const NeighborHistogram> histograms,
                     std::span<const Label> labels, double beta);

enum class ClampMode { none, critical };

// ln(1 + sqrt(q)). Throws std::invalid_argument for q < 2.
double critical_beta(int q);

// mode == critical caps at critical_beta(q). Negative values become 0 unless
// allow_negative is set; `warning` (when given) receives a note when that
// happens.
double clamp_beta(double beta_mpl, int q, ClampMode mode, bool allow_negative = false,
                  std::string* warning = nullptr);

struct EstimationConfig {
  double beta0 = 0.0;
  double beta1 = 1.0;
  double tol = 1e-6;
  int max_iter = 100;
  double beta_max = 10.0;
  ClampMode clamp = ClampMode::none;
  bool allow_negative = false;
};

enum class EstimationStatus {
  interior_root,     // derivative root found
  no_interior_root,  // derivative stays positive up to beta_max (saturated field)
  noise_floor,       // derivative negative at 0 and negative roots are clamped
};

const char* to_string(EstimationStatus s);

struct EstimationResult {
  double beta_mpl = 0.0;
  double beta_used = 0.0;
  bool clamped = false;
  int iterations = 0;
  double residual = 0.0;  // pl_derivative at beta_mpl
  EstimationStatus status = EstimationStatus::interior_root;
  std::vector<std::string> warnings;
};

// Maximum pseudo-likelihood estimate of beta by the secant method on
// pl_derivative, followed by clamp_beta per `config`. If the secant iterates
// leave [-beta_max, beta_max] or stall, a bracketing bisection on the same
// interval is tried before falling back to the flagged boundary results.
EstimationResult estimate_beta(const LabeledGraph& g, const EstimationConfig& config = {});

}  // namespace lohi
