#pragma once

#include "synclab/energy.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace synclab {

// Result of one executable check. `witness` holds the named quantities the
// verdict was computed from; every value is reproducible bit-exactly from
// the inputs.
struct Certificate {
  std::string name;
  bool holds = false;
  std::map<std::string, double> witness;
  std::string notes;
};

// Quadrant certificate: on a connected graph with a non-degenerate order
// parameter, max_i |sin(theta_i - theta_r)| < 1/sqrt(2) pins every local
// minimizer to the aligned state.
Certificate check_quadrant(const WeightedGraph& g, const PhaseState& s);

// Dense-degree certificate: min weighted degree / (n-1) >= (3 - sqrt(2))/2
// rules out spurious local minima.
Certificate check_min_degree(const WeightedGraph& g);

// The Erdos-Renyi density regime p = 32 gamma log(n) / n^{1/3} (natural
// log) in which the landscape is benign with high probability, together
// with the success-probability lower bound
//   1 - 4 exp(n (log(100 n^{1/3}) - 2 gamma log n)) - 10 n^{-gamma+1}.
// A bound <= 0, or p > 1 (flagged vacuous), carries no information at the
// given size.
struct ErRegime {
  long long n = 0;
  double gamma = 1.0;
  double p = 0.0;
  double prob_bound = 0.0;
  bool vacuous = false;  // p > 1
};

ErRegime er_regime(long long n, double gamma);

// Bernstein-type deviation check for a 0/1 graph drawn with edge density p:
// both ||A - E A|| (spectral) and ||(A - E A) 1||_inf must be within
//   sqrt(2 gamma n p (1-p) log n) + 2 gamma log(n) / 3.
// The centered matrix uses the convention Delta_ii = 0.
Certificate deviation_bound(const WeightedGraph& g, double p, double gamma);

// The two restricted-isometry ratios
//   |<A - pJ, X o X>| / (p ||X||_F^2)  and  |<A - pJ, X>| / (p ||X||_F^2)
// at X = Q Q^T for the given state (diagonal of A - pJ zeroed).
std::pair<double, double> rip_ratios(const WeightedGraph& g, double p,
                                     const PhaseState& s);

// Sampling probe of the restricted isometry property: draws `samples`
// uniform phase vectors and records the largest ratio seen for each
// inequality. Holds iff neither ratio ever exceeds delta. A falsification
// probe, not a proof over all states.
Certificate rip_probe(const WeightedGraph& g, double p, double delta,
                      int samples, std::uint64_t seed);

// Criticality residual ||grad E(theta)||_inf.
double first_order_residual(const WeightedGraph& g, const PhaseState& s);

}  // namespace synclab
