#include "synclab/spectral.hpp"

#include "synclab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace synclab {

Vector hessian_spectrum(const WeightedGraph& g, const PhaseState& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hessian(g, s),
                                           Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("Hessian eigensolve did not converge");
  }
  return es.eigenvalues();
}

CriticalPointReport classify_critical(const WeightedGraph& g,
                                      const PhaseState& s, double grad_tol,
                                      double eig_tol) {
  CriticalPointReport report;
  report.grad_inf_norm = gradient(g, s).cwiseAbs().maxCoeff();
  report.hessian_eigs = hessian_spectrum(g, s);
  report.lambda2 = g.size() > 1 ? report.hessian_eigs(1) : 0.0;
  if (report.grad_inf_norm > grad_tol) {
    report.verdict = Verdict::NotCritical;
  } else if (report.hessian_eigs(0) < -eig_tol) {
    report.verdict = Verdict::Saddle;
  } else {
    report.verdict = Verdict::LocalMinCandidate;
  }
  return report;
}

PhaseState twisted_state(int n) {
  if (n < 2) throw ValidationError("twisted state needs n >= 2");
  Vector theta(n);
  for (int l = 0; l < n; ++l) {
    theta(l) = 2.0 * std::numbers::pi * l / n;
  }
  return PhaseState(std::move(theta));
}

PhaseState bipartite_twisted_state(int n) {
  const PhaseState base = twisted_state(n);
  Vector theta(2 * n);
  theta << base.theta, base.theta;
  return PhaseState(std::move(theta));
}

namespace {

// cos(2 pi m / n) for m = 0..n-1; all circulant formulas below index into
// this table so that equal angles give bit-equal cosines.
std::vector<double> cosine_table(int n) {
  std::vector<double> c(n);
  for (int m = 0; m < n; ++m) {
    c[m] = std::cos(2.0 * std::numbers::pi * m / n);
  }
  return c;
}

void check_ring_params(int n, int k) {
  if (n < 3) throw ValidationError("ring graph needs n >= 3");
  if (k < 1 || 2 * k > n - 1) {
    throw ValidationError("ring neighbor count must satisfy 1 <= k <= (n-1)/2");
  }
}

// The DFT eigenvalue of the twisted-state Hessian for frequency l (1-based):
// 2 sum_{j<=k} c_j - 2 sum_{j<=k} c_j c_{(l-1)j mod n}.
double circulant_eig(const std::vector<double>& c, int n, int k, int l) {
  double plain = 0.0;
  double modulated = 0.0;
  for (int j = 1; j <= k; ++j) {
    plain += c[j];
    modulated += c[j] * c[static_cast<std::size_t>(l - 1) * j % n];
  }
  return 2.0 * (plain - modulated);
}

double min_eig_above_fundamental(const std::vector<double>& c, int n, int k) {
  double min_val = std::numeric_limits<double>::infinity();
  for (int l = 2; l <= n; ++l) {
    min_val = std::min(min_val, circulant_eig(c, n, k, l));
  }
  return min_val;
}

}  // namespace

Vector wsg_hessian_eigs(int n, int k) {
  check_ring_params(n, k);
  const std::vector<double> c = cosine_table(n);
  Vector eigs(n);
  for (int l = 1; l <= n; ++l) {
    eigs(l - 1) = circulant_eig(c, n, k, l);
  }
  return eigs;
}

std::vector<Lambda2Row> wsg_lambda2_curve(int n, int k_min, int k_max) {
  check_ring_params(n, k_min);
  check_ring_params(n, k_max);
  if (k_min > k_max) throw ValidationError("empty k range");
  const std::vector<double> c = cosine_table(n);
  std::vector<Lambda2Row> rows;
  rows.reserve(k_max - k_min + 1);
  for (int k = k_min; k <= k_max; ++k) {
    rows.push_back({k, 2.0 * k / (n - 1), min_eig_above_fundamental(c, n, k)});
  }
  return rows;
}

int wsg_critical_k(int n) {
  if (n < 6) throw ValidationError("critical-k scan needs n >= 6");
  const std::vector<double> c = cosine_table(n);
  int critical = 0;
  for (int k = 1; 2 * k <= n - 1; ++k) {
    if (min_eig_above_fundamental(c, n, k) > 0.0) critical = k;
  }
  return critical;
}

Vector bipartite_twisted_eigs(int n, int k) {
  check_ring_params(n, k);
  const std::vector<double> c = cosine_table(n);
  Vector eigs(2 * n);
  for (int l = 1; l <= n; ++l) {
    double plain = 0.0;
    double modulated = 0.0;
    for (int j = 1; j <= k; ++j) {
      plain += c[j];
      modulated += c[j] * c[static_cast<std::size_t>(l - 1) * j % n];
    }
    eigs(2 * (l - 1)) = 2.0 * plain - 2.0 * modulated;
    eigs(2 * (l - 1) + 1) = 2.0 * plain + 2.0 * modulated;
  }
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

std::vector<SignStateReport> path_critical_points(int n) {
  if (n < 2) throw ValidationError("path graph needs n >= 2");
  if (n > 16) {
    throw ValidationError("sign-state enumeration is limited to n <= 16");
  }
  const WeightedGraph g = gen_path(n);
  const std::uint32_t count = 1u << n;
  std::vector<SignStateReport> reports;
  reports.reserve(count);
  for (std::uint32_t pattern = 0; pattern < count; ++pattern) {
    Vector theta(n);
    for (int i = 0; i < n; ++i) {
      theta(i) = (pattern >> i) & 1u ? std::numbers::pi : 0.0;
    }
    const PhaseState s(std::move(theta));
    const CriticalPointReport r = classify_critical(g, s);
    reports.push_back({pattern, r.grad_inf_norm, r.verdict});
  }
  return reports;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotCritical:
      return "not_critical";
    case Verdict::LocalMinCandidate:
      return "local_min_candidate";
    case Verdict::Saddle:
      return "saddle";
  }
  return "unknown";
}

}  // namespace synclab
