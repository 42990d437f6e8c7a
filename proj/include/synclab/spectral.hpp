#pragma once

#include "synclab/energy.hpp"

#include <cstdint>
#include <vector>

namespace synclab {

enum class Verdict { NotCritical, LocalMinCandidate, Saddle };

// "Candidate" because lambda >= 0 with degenerate directions cannot certify
// a strict minimum.
struct CriticalPointReport {
  double grad_inf_norm = 0.0;
  Vector hessian_eigs;      // ascending
  double lambda2 = 0.0;     // second-smallest eigenvalue
  Verdict verdict = Verdict::NotCritical;
};

// Full symmetric eigendecomposition of the Hessian; ascending eigenvalues.
// The constant vector is always in the null space, so the spectrum contains
// a (numerical) zero.
Vector hessian_spectrum(const WeightedGraph& g, const PhaseState& s);

// NotCritical if the gradient infinity norm exceeds grad_tol; otherwise
// Saddle iff the smallest Hessian eigenvalue is below -eig_tol, else
// LocalMinCandidate.
CriticalPointReport classify_critical(const WeightedGraph& g,
                                      const PhaseState& s,
                                      double grad_tol = 1e-7,
                                      double eig_tol = 1e-8);

// theta_l = 2*pi*l/n for l = 0..n-1: one full turn around the ring.
PhaseState twisted_state(int n);

// The twisted state repeated across both halves of a 2n-vertex bipartite
// ring graph.
PhaseState bipartite_twisted_state(int n);

// Closed-form eigenvalues of the Hessian of the WSG ring at the twisted
// state (a circulant matrix, diagonalized by the DFT):
//   lambda_l = 2 sum_{j<=k} cos(2 pi j / n) (1 - cos(2 pi (l-1) j / n)),
// for l = 1..n, returned in that index order (not sorted). lambda_1 = 0
// exactly.
Vector wsg_hessian_eigs(int n, int k);

struct Lambda2Row {
  int k = 0;
  double mu = 0.0;          // 2k / (n-1)
  double lambda2_min = 0.0; // min over l >= 2 of the closed form
};

// One row per k in [k_min, k_max]. The minimum over l >= 2 is reported
// because the eigenvalue ordering across l is not monotone in k; this is
// the true second-smallest of the sorted multiset.
std::vector<Lambda2Row> wsg_lambda2_curve(int n, int k_min, int k_max);

// Largest k for which the twisted state passes the second-order test
// (min over l >= 2 of the closed form strictly positive); 0 if none.
int wsg_critical_k(int n);

// Closed-form Hessian eigenvalues of the bipartite WSG graph at the doubled
// twisted state: 2n values, the +- branches of the circulant formula,
// returned sorted ascending.
Vector bipartite_twisted_eigs(int n, int k);

struct SignStateReport {
  std::uint32_t pattern = 0;  // bit i set means theta_i = pi
  double grad_inf_norm = 0.0;
  Verdict verdict = Verdict::NotCritical;
};

// Enumerates all 2^n states with theta_i in {0, pi} on the path graph and
// classifies each one. Exactly the two constant patterns come out as
// LocalMinCandidate. Limited to n <= 16.
std::vector<SignStateReport> path_critical_points(int n);

const char* to_string(Verdict v);

}  // namespace synclab
