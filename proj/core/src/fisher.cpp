#include "lohi/fisher.hpp"

#include <algorithm>
#include <cmath>

#include "lohi/potts.hpp"

namespace lohi {

namespace {

double sum_all(const SquareMatrix& m) {
  double s = 0.0;
  for (double x : m.data) s += x;
  return s;
}

SquareMatrix outer(const std::vector<double>& a, const std::vector<double>& b) {
  SquareMatrix m{a.size(), std::vector<double>(a.size() * b.size())};
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < b.size(); ++c) m(r, c) = a[r] * b[c];
  }
  return m;
}

SquareMatrix hadamard(const SquareMatrix& a, const SquareMatrix& b) {
  SquareMatrix m{a.n, std::vector<double>(a.data.size())};
  for (std::size_t i = 0; i < a.data.size(); ++i) m.data[i] = a.data[i] * b.data[i];
  return m;
}

}  // namespace

namespace {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

// Sorted counts minus the smallest count. Both information terms depend only
// on this canonical form, so computing from it gives bit-identical results
// for nodes whose terms are equal in exact arithmetic.
std::vector<int> canonical_counts(std::span<const int> histogram) {
  std::vector<int> sorted(histogram.begin(), histogram.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty()) {
    const int low = sorted.front();
    for (int& c : sorted) c -= low;
  }
  return sorted;
}

// Mean and variance of U - min U under the local conditional.
Moments local_moments(std::span<const int> histogram, double beta) {
  const auto sorted = canonical_counts(histogram);
  const auto p = local_distribution(sorted, beta);
  Moments m;
  for (std::size_t l = 0; l < p.size(); ++l) m.mean += sorted[l] * p[l];
  for (std::size_t l = 0; l < p.size(); ++l) {
    const double d = sorted[l] - m.mean;
    m.variance += p[l] * d * d;
  }
  return m;
}

}  // namespace

double phi_direct(std::span<const int> histogram, Label x, double beta) {
  const int low = *std::min_element(histogram.begin(), histogram.end());
  const double score = (histogram[static_cast<std::size_t>(x - 1)] - low) -
                       local_moments(histogram, beta).mean;
  return score * score;
}

double psi_direct(std::span<const int> histogram, double beta) {
  return local_moments(histogram, beta).variance;
}

TensorWorkspace TensorWorkspace::build(std::span<const int> histogram, Label x, double beta,
                                       bool shift_exponent) {
  const std::size_t q = histogram.size();
  TensorWorkspace ws;
  ws.v.resize(q);
  ws.w.resize(q);
  ws.a = {q, std::vector<double>(q * q)};
  ws.b = {q, std::vector<double>(q * q)};

  double shift = 0.0;
  if (shift_exponent) {
    shift = -INFINITY;
    for (int u : histogram) shift = std::max(shift, beta * u);
  }
  const double ux = histogram[static_cast<std::size_t>(x - 1)];
  for (std::size_t l = 0; l < q; ++l) {
    ws.v[l] = ux - histogram[l];
    ws.w[l] = std::exp(beta * histogram[l] - shift);
    for (std::size_t k = 0; k < q; ++k) {
      ws.a(l, k) = histogram[l];
      ws.b(l, k) = static_cast<double>(histogram[l]) - histogram[k];
    }
  }
  ws.lambda = hadamard(ws.a, ws.b);
  return ws;
}

double phi_tensorial(const TensorWorkspace& ws) {
  std::vector<double> vw(ws.v.size());
  for (std::size_t l = 0; l < vw.size(); ++l) vw[l] = ws.v[l] * ws.w[l];
  return sum_all(outer(vw, vw)) / sum_all(outer(ws.w, ws.w));
}

double psi_tensorial(const TensorWorkspace& ws) {
  const SquareMatrix ww = outer(ws.w, ws.w);
  return sum_all(hadamard(ws.lambda, ww)) / sum_all(ww);
}

double shape_operator(double phi, double psi, double regularizer) {
  return -psi / (phi + regularizer);
}

std::vector<NodeInformation> node_information(const LabeledGraph& g, double beta,
                                              const FisherOptions& options) {
  std::vector<NodeInformation> info(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto u = neighbor_histogram(g, i);
    auto& n = info[i];
    if (options.path == FisherPath::tensorial) {
      // Canonical counts as in local_moments, with x moved to a label that
      // carries the same count.
      const auto sorted = canonical_counts(u);
      const int ux = u[static_cast<std::size_t>(g.label(i) - 1)] -
                     *std::min_element(u.begin(), u.end());
      const auto x = static_cast<Label>(std::lower_bound(sorted.begin(), sorted.end(), ux) -
                                        sorted.begin()) + 1;
      const auto ws = TensorWorkspace::build(sorted, x, beta);
      n.phi = phi_tensorial(ws);
      n.psi = psi_tensorial(ws);
    } else {
      n.phi = phi_direct(u, g.label(i), beta);
      n.psi = psi_direct(u, beta);
    }
    n.shape = shape_operator(n.phi, n.psi, options.regularizer);
  }

  if (info.empty()) return info;
  auto [lo, hi] = std::minmax_element(info.begin(), info.end(), [](const auto& a, const auto& b) {
    return a.shape < b.shape;
  });
  const double min_s = lo->shape;
  const double range = hi->shape - min_s;
  for (auto& n : info) n.shape_normalized = range > 0.0 ? (n.shape - min_s) / range : 0.0;
  return info;
}

ObservedInformation observed_information(std::span<const NodeInformation> info) {
  ObservedInformation o;
  if (info.empty()) return o;
  for (const auto& n : info) {
    o.phi += n.phi;
    o.psi += n.psi;
  }
  o.phi /= static_cast<double>(info.size());
  o.psi /= static_cast<double>(info.size());
  return o;
}

}  // namespace lohi
