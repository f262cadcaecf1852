#include "lohi/potts.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace lohi {

namespace {

// log sum_l exp(beta * U(l)), shifted by the max exponent.
double log_partition(std::span<const int> histogram, double beta) {
  double top = -INFINITY;
  for (int u : histogram) top = std::max(top, beta * u);
  double sum = 0.0;
  for (int u : histogram) sum += std::exp(beta * u - top);
  return top + std::log(sum);
}

// E[U] under softmax(beta * U).
double expected_count(std::span<const int> histogram, double beta) {
  auto p = local_distribution(histogram, beta);
  double e = 0.0;
  for (std::size_t l = 0; l < p.size(); ++l) e += histogram[l] * p[l];
  return e;
}

}  // namespace

std::vector<double> local_distribution(std::span<const int> histogram, double beta) {
  std::vector<double> p(histogram.size());
  if (histogram.empty()) return p;
  // The largest exponent is beta * max U for beta >= 0 and beta * min U
  // otherwise; shifting by it keeps every term in (0, 1].
  double top = -INFINITY;
  for (int u : histogram) top = std::max(top, beta * u);
  double sum = 0.0;
  for (std::size_t l = 0; l < histogram.size(); ++l) {
    p[l] = std::exp(beta * histogram[l] - top);
    sum += p[l];
  }
  for (double& x : p) x /= sum;
  return p;
}

double local_probability(std::span<const int> histogram, Label m, double beta) {
  if (m < 1 || static_cast<std::size_t>(m) > histogram.size()) {
    throw std::out_of_range("label " + std::to_string(m) + " outside 1.." +
                            std::to_string(histogram.size()));
  }
  return local_distribution(histogram, beta)[static_cast<std::size_t>(m - 1)];
}

double log_pseudo_likelihood(std::span<const NeighborHistogram> histograms,
                             std::span<const Label> labels, double beta) {
  double total = 0.0;
  for (std::size_t i = 0; i < histograms.size(); ++i) {
    const auto& u = histograms[i];
    total += beta * u[static_cast<std::size_t>(labels[i] - 1)] - log_partition(u, beta);
  }
  return total;
}

double pl_derivative(std::span<const NeighborHistogram> histograms,
                     std::span<const Label> labels, double beta) {
  double observed = 0.0;
  double expected = 0.0;
  for (std::size_t i = 0; i < histograms.size(); ++i) {
    const auto& u = histograms[i];
    observed += u[static_cast<std::size_t>(labels[i] - 1)];
    expected += expected_count(u, beta);
  }
  return observed - expected;
}

double log_pseudo_likelihood(const LabeledGraph& g, double beta) {
  auto h = neighbor_histograms(g);
  return log_pseudo_likelihood(h, g.labels(), beta);
}

double pl_derivative(const LabeledGraph& g, double beta) {
  auto h = neighbor_histograms(g);
  return pl_derivative(h, g.labels(), beta);
}

double critical_beta(int q) {
  if (q < 2) throw std::invalid_argument("critical_beta needs q >= 2, got " + std::to_string(q));
  return std::log1p(std::sqrt(static_cast<double>(q)));
}

double clamp_beta(double beta_mpl, int q, ClampMode mode, bool allow_negative,
                  std::string* warning) {
  double beta = beta_mpl;
  if (mode == ClampMode::critical) beta = std::min(critical_beta(q), beta);
  if (beta < 0.0 && !allow_negative) {
    if (warning) {
      *warning = "negative beta estimate " + std::to_string(beta_mpl) +
                 " (anti-ferromagnetic labeling) clamped to 0";
    }
    beta = 0.0;
  }
  return beta;
}

const char* to_string(EstimationStatus s) {
  switch (s) {
    case EstimationStatus::interior_root:
      return "interior_root";
    case EstimationStatus::no_interior_root:
      return "no_interior_root";
    case EstimationStatus::noise_floor:
      return "noise_floor";
  }
  return "unknown";
}

namespace {

struct Root {
  double beta;
  double value;
  int iterations;
};

std::optional<Root> secant(const auto& f, double b0, double b1, const EstimationConfig& c,
                           int& iterations) {
  double f0 = f(b0);
  double f1 = f(b1);
  for (int it = 0; it < c.max_iter; ++it) {
    ++iterations;
    if (std::abs(f1) < c.tol) return Root{b1, f1, iterations};
    if (f1 == f0) return std::nullopt;
    const double b2 = b1 - f1 * (b1 - b0) / (f1 - f0);
    if (!std::isfinite(b2) || std::abs(b2) > c.beta_max) return std::nullopt;
    b0 = b1;
    f0 = f1;
    b1 = b2;
    f1 = f(b1);
    if (std::abs(b1 - b0) < c.tol || std::abs(f1) < c.tol) return Root{b1, f1, iterations};
  }
  return std::nullopt;
}

// f(lo) > 0 > f(hi) or the reverse.
Root bisect(const auto& f, double lo, double hi, double f_lo, const EstimationConfig& c,
            int iterations) {
  double fm = f_lo;
  double mid = lo;
  for (int it = 0; it < 200 && hi - lo > c.tol; ++it) {
    ++iterations;
    mid = 0.5 * (lo + hi);
    fm = f(mid);
    if (std::abs(fm) < c.tol) break;
    if ((fm > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  return {mid, fm, iterations};
}

}  // namespace

EstimationResult estimate_beta(const LabeledGraph& g, const EstimationConfig& config) {
  const auto histograms = neighbor_histograms(g);
  const auto labels = g.labels();
  auto f = [&](double beta) {
    double d = pl_derivative(histograms, labels, beta);
    assert(std::isfinite(d));
    return d;
  };

  EstimationResult r;
  const double at_start = f(config.beta0);
  const double at_zero = config.beta0 == 0.0 ? at_start : f(0.0);

  auto finish = [&](double beta, double residual, EstimationStatus status) {
    r.beta_mpl = beta;
    r.residual = residual;
    r.status = status;
    std::string warning;
    r.beta_used = clamp_beta(beta, g.q(), config.clamp, config.allow_negative, &warning);
    r.clamped = r.beta_used != r.beta_mpl;
    if (!warning.empty()) r.warnings.push_back(warning);
    return r;
  };

  if (std::abs(at_start) < config.tol) return finish(config.beta0, at_start, EstimationStatus::interior_root);

  if (at_zero < 0.0 && !config.allow_negative) {
    r.warnings.push_back(
        "pseudo-likelihood derivative is negative at beta = 0; labeling is noisier than "
        "independent states, estimate set to 0");
    return finish(0.0, at_zero, EstimationStatus::noise_floor);
  }

  if (auto root = secant(f, config.beta0, config.beta1, config, r.iterations)) {
    if (root->beta >= 0.0 || config.allow_negative) {
      return finish(root->beta, root->value, EstimationStatus::interior_root);
    }
  }

  // Secant left the search interval or stalled: bracket on the side of zero
  // where the root has to be.
  const double far = at_zero > 0.0 ? config.beta_max : -config.beta_max;
  const double at_far = f(far);
  if ((at_zero > 0.0) != (at_far > 0.0) || at_far == 0.0) {
    Root root = at_zero > 0.0 ? bisect(f, 0.0, far, at_zero, config, r.iterations)
                              : bisect(f, far, 0.0, at_far, config, r.iterations);
    r.iterations = root.iterations;
    return finish(root.beta, root.value, EstimationStatus::interior_root);
  }

  r.warnings.push_back("no root of the pseudo-likelihood derivative within |beta| <= " +
                       std::to_string(config.beta_max) + "; estimate capped");
  return finish(far, at_far, EstimationStatus::no_interior_root);
}

}  // namespace lohi
