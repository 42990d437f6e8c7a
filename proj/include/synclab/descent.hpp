#pragma once

#include "synclab/energy.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace synclab {

struct DescentConfig {
  double step = 0.005;
  int max_iters = 1000;
  double grad_tol = 1e-8;    // Euclidean norm of the gradient
  double align_tol = 1e-3;   // success threshold on ||r||/n
  int trace_every = 0;       // 0 = no trace

  void validate() const;
};

enum class StopReason { GradientTol, MaxIters };
enum class Classification { Global, NonGlobal };

struct DescentOutcome {
  PhaseState final_theta;
  double final_energy = 0.0;
  double final_grad_norm = 0.0;
  int iterations = 0;
  StopReason stopped_by = StopReason::GradientTol;
  Classification classification = Classification::NonGlobal;
};

struct TraceRow {
  int iteration = 0;
  double energy = 0.0;
  double grad_norm = 0.0;
  double order_magnitude = 0.0;
};

struct DescentTrace {
  std::vector<TraceRow> rows;
};

// Each angle i.i.d. uniform on [0, 2*pi); deterministic in the seed.
PhaseState random_init(int n, std::uint64_t seed);

// Euler-discretized gradient flow theta <- theta - step * grad E(theta).
// Stops when ||grad E|| <= grad_tol or after max_iters steps; a critical
// initial state is returned unchanged at iteration 0. The outcome is
// Global iff the final order-parameter magnitude is >= (1 - align_tol) * n.
// Throws NumericalError (with the iteration) if a non-finite value appears.
std::pair<DescentOutcome, DescentTrace> descend(const WeightedGraph& g,
                                                const PhaseState& init,
                                                const DescentConfig& cfg);

// Runs `trials` descents from random initializations with per-trial seed
// derive_seed(base_seed, trial) and returns the number of Global outcomes.
// The count is independent of scheduling; `threads` only adds parallelism.
int multi_restart(const WeightedGraph& g, int trials, std::uint64_t base_seed,
                  const DescentConfig& cfg, int threads = 1);

// Secondary, energy-based success classifier for cross-checking the
// order-parameter rule: Global iff energy <= epsilon * sum_{i,j} a_ij
// (double-sum normalization).
Classification classify_energy(const WeightedGraph& g, double energy_value,
                               double epsilon);

const char* to_string(StopReason r);
const char* to_string(Classification c);

}  // namespace synclab
