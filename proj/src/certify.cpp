#include "synclab/certify.hpp"

#include "synclab/errors.hpp"
#include "synclab/rng.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <string>

namespace synclab {

namespace {

constexpr double kQuadrantThreshold = std::numbers::sqrt2 / 2.0;  // 1/sqrt(2)

// A - p J with the diagonal zeroed: the convention that the (unobserved)
// diagonal entries of A equal p, applied only inside these checks.
Matrix centered_adjacency(const WeightedGraph& g, double p) {
  Matrix delta = g.weights().array() - p;
  delta.diagonal().setZero();
  return delta;
}

void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError("edge density must lie in (0, 1)");
  }
}

std::pair<double, double> rip_ratios_centered(const Matrix& delta, double p,
                                              const PhaseState& s) {
  const CircleEmbedding emb = embedding(s);
  const Vector& x = emb.x;
  const Vector& y = emb.y;
  // X = x x^T + y y^T, so both inner products reduce to quadratic forms.
  const double linear = x.dot(delta * x) + y.dot(delta * y);
  const Vector xx = x.cwiseProduct(x);
  const Vector xy = x.cwiseProduct(y);
  const Vector yy = y.cwiseProduct(y);
  const double hadamard =
      xx.dot(delta * xx) + 2.0 * xy.dot(delta * xy) + yy.dot(delta * yy);
  const double nx = x.squaredNorm();
  const double ny = y.squaredNorm();
  const double cross = x.dot(y);
  const double fro2 = nx * nx + 2.0 * cross * cross + ny * ny;  // ||X||_F^2
  return {std::abs(hadamard) / (p * fro2), std::abs(linear) / (p * fro2)};
}

}  // namespace

Certificate check_quadrant(const WeightedGraph& g, const PhaseState& s) {
  if (g.size() != s.size()) {
    throw ShapeError("phase vector length does not match the graph");
  }
  Certificate cert;
  cert.name = "quadrant";
  const bool connected = is_connected(g);
  const OrderParameter r = order_parameter(s);
  cert.witness["order_magnitude"] = r.magnitude;
  cert.witness["threshold"] = kQuadrantThreshold;
  if (!connected) {
    cert.holds = false;
    cert.notes = "graph disconnected";
    return cert;
  }
  if (r.degenerate) {
    cert.holds = false;
    cert.notes = "order parameter degenerate";
    return cert;
  }
  double max_abs_sin = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    max_abs_sin = std::max(max_abs_sin, std::abs(std::sin(s.theta(i) - r.angle)));
  }
  cert.witness["theta_r"] = r.angle;
  cert.witness["max_abs_sin"] = max_abs_sin;
  cert.holds = max_abs_sin < kQuadrantThreshold;
  return cert;
}

Certificate check_min_degree(const WeightedGraph& g) {
  Certificate cert;
  cert.name = "min_degree";
  const double threshold = (3.0 - std::numbers::sqrt2) / 2.0;
  const double min_degree = g.degrees().minCoeff();
  const double mu = g.size() > 1 ? min_degree / (g.size() - 1) : 0.0;
  cert.witness["min_degree"] = min_degree;
  cert.witness["mu"] = mu;
  cert.witness["threshold"] = threshold;
  cert.holds = mu >= threshold;
  return cert;
}

ErRegime er_regime(long long n, double gamma) {
  if (n < 2) throw ValidationError("regime evaluation needs n >= 2");
  if (!(gamma >= 1.0)) throw ValidationError("gamma must be >= 1");
  ErRegime regime;
  regime.n = n;
  regime.gamma = gamma;
  const double log_n = std::log(static_cast<double>(n));
  const double cbrt_n = std::cbrt(static_cast<double>(n));
  regime.p = 32.0 * gamma * log_n / cbrt_n;
  regime.vacuous = regime.p > 1.0;
  regime.prob_bound = 1.0 -
                      4.0 * std::exp(n * (std::log(100.0 * cbrt_n) -
                                          2.0 * gamma * log_n)) -
                      10.0 * std::pow(static_cast<double>(n), -gamma + 1.0);
  return regime;
}

Certificate deviation_bound(const WeightedGraph& g, double p, double gamma) {
  require_probability(p);
  if (!(gamma > 0.0)) throw ValidationError("gamma must be positive");
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = g.weight(i, j);
      if (w != 0.0 && w != 1.0) {
        throw ValidationError("deviation bound requires a 0/1 graph");
      }
    }
  }
  const Matrix delta = centered_adjacency(g, p);
  Eigen::SelfAdjointEigenSolver<Matrix> es(delta, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigensolve did not converge");
  }
  const double spectral_norm = std::max(std::abs(es.eigenvalues()(0)),
                                        std::abs(es.eigenvalues()(n - 1)));
  const double row_sum_inf = (delta * Vector::Ones(n)).cwiseAbs().maxCoeff();
  const double log_n = std::log(static_cast<double>(n));
  const double bound =
      std::sqrt(2.0 * gamma * n * p * (1.0 - p) * log_n) + 2.0 * gamma * log_n / 3.0;

  Certificate cert;
  cert.name = "deviation_bound";
  cert.witness["spectral_norm"] = spectral_norm;
  cert.witness["row_sum_inf"] = row_sum_inf;
  cert.witness["bound"] = bound;
  cert.witness["p"] = p;
  cert.witness["gamma"] = gamma;
  cert.holds = spectral_norm <= bound && row_sum_inf <= bound;
  return cert;
}

std::pair<double, double> rip_ratios(const WeightedGraph& g, double p,
                                     const PhaseState& s) {
  require_probability(p);
  if (g.size() != s.size()) {
    throw ShapeError("phase vector length does not match the graph");
  }
  return rip_ratios_centered(centered_adjacency(g, p), p, s);
}

Certificate rip_probe(const WeightedGraph& g, double p, double delta,
                      int samples, std::uint64_t seed) {
  require_probability(p);
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw ValidationError("delta must lie in (0, 1]");
  }
  if (samples < 1) throw ValidationError("samples must be positive");
  const Matrix centered = centered_adjacency(g, p);
  double max_hadamard = 0.0;
  double max_linear = 0.0;
  for (int i = 0; i < samples; ++i) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Vector theta(g.size());
    for (int v = 0; v < g.size(); ++v) {
      theta(v) = 2.0 * std::numbers::pi * rng.uniform();
    }
    const auto [hadamard, linear] =
        rip_ratios_centered(centered, p, PhaseState(std::move(theta)));
    max_hadamard = std::max(max_hadamard, hadamard);
    max_linear = std::max(max_linear, linear);
  }
  Certificate cert;
  cert.name = "rip_probe";
  cert.witness["max_ratio_hadamard"] = max_hadamard;
  cert.witness["max_ratio_linear"] = max_linear;
  cert.witness["delta"] = delta;
  cert.witness["p"] = p;
  cert.witness["samples"] = static_cast<double>(samples);
  cert.holds = max_hadamard <= delta && max_linear <= delta;
  cert.notes = "sampling probe, not a proof over all states";
  return cert;
}

double first_order_residual(const WeightedGraph& g, const PhaseState& s) {
  return gradient(g, s).cwiseAbs().maxCoeff();
}

}  // namespace synclab
