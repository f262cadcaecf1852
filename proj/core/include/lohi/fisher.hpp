#pragma once

#include <span>
#include <vector>

#include <cstddef>

#include "lohi/graph.hpp"

namespace lohi {

inline constexpr double kDefaultShapeRegularizer = 0.001;

// First-order observed information of one node: squared score
// (U(x) - E[U])^2 under the local conditional distribution.
double phi_direct(std::span<const int> histogram, Label x, double beta);

// Second-order observed information of one node: Var[U] under the local
// conditional distribution.
double psi_direct(std::span<const int> histogram, double beta);

// Dense q x q form used by the tensorial expressions. Row-major storage.
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  double operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
};

// v[l] = U(x) - U(l); w[l] = exp(beta * (U(l) - shift)); A[l][k] = U(l);
// B[l][k] = U(l) - U(k); lambda = A (hadamard) B.
// With shift_exponent set, shift = max U, which rescales w by a constant and
// leaves both tensorial ratios unchanged.
struct TensorWorkspace {
  std::vector<double> v;
  std::vector<double> w;
  SquareMatrix a;
  SquareMatrix b;
  SquareMatrix lambda;

  static TensorWorkspace build(std::span<const int> histogram, Label x, double beta,
                               bool shift_exponent = true);
};

// sum((v.*w)(v.*w)^T) / sum(w w^T)
double phi_tensorial(const TensorWorkspace& ws);
// sum(lambda .* (w w^T)) / sum(w w^T)
double psi_tensorial(const TensorWorkspace& ws);

// -psi / (phi + regularizer); never positive.
double shape_operator(double phi, double psi,
                      double regularizer = kDefaultShapeRegularizer);

struct NodeInformation {
  double phi = 0.0;
  double psi = 0.0;
  double shape = 0.0;
  double shape_normalized = 0.0;
};

enum class FisherPath { direct, tensorial };

struct FisherOptions {
  double regularizer = kDefaultShapeRegularizer;
  FisherPath path = FisherPath::direct;
};

// Per-node information and curvature at `beta`; shape_normalized is the
// min-max rescaling of shape over all nodes (all zero when shape is constant).
std::vector<NodeInformation> node_information(const LabeledGraph& g, double beta,
                                              const FisherOptions& options = {});

// Sample averages of the per-node terms.
struct ObservedInformation {
  double phi = 0.0;
  double psi = 0.0;
};

ObservedInformation observed_information(std::span<const NodeInformation> info);

}  // namespace lohi
