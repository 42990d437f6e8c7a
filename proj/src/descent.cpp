#include "synclab/descent.hpp"

#include "synclab/errors.hpp"
#include "synclab/rng.hpp"

#include "parallel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace synclab {

void DescentConfig::validate() const {
  if (!(step > 0.0)) throw ValidationError("step must be positive");
  if (max_iters < 1) throw ValidationError("max_iters must be positive");
  if (!(grad_tol > 0.0)) throw ValidationError("grad_tol must be positive");
  if (!(align_tol > 0.0 && align_tol < 1.0)) {
    throw ValidationError("align_tol must lie in (0, 1)");
  }
  if (trace_every < 0) throw ValidationError("trace_every must be nonnegative");
}

PhaseState random_init(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("phase vector length must be positive");
  SplitMix64 rng(seed);
  Vector theta(n);
  for (int i = 0; i < n; ++i) {
    theta(i) = 2.0 * std::numbers::pi * rng.uniform();
  }
  return PhaseState(std::move(theta));
}

std::pair<DescentOutcome, DescentTrace> descend(const WeightedGraph& g,
                                                const PhaseState& init,
                                                const DescentConfig& cfg) {
  cfg.validate();
  if (g.size() != init.size()) {
    throw ShapeError("initial state has length " + std::to_string(init.size()) +
                     " but the graph has " + std::to_string(g.size()) +
                     " vertices");
  }

  PhaseState theta = init;
  DescentTrace trace;
  int iter = 0;
  Vector grad;
  double grad_norm = 0.0;

  while (true) {
    grad = gradient(g, theta);
    grad_norm = grad.norm();
    if (!std::isfinite(grad_norm)) {
      throw NumericalError("non-finite gradient at iteration " +
                           std::to_string(iter));
    }
    const bool stop = grad_norm <= cfg.grad_tol || iter >= cfg.max_iters;
    if (cfg.trace_every > 0 && (iter % cfg.trace_every == 0 || stop)) {
      if (trace.rows.empty() || trace.rows.back().iteration != iter) {
        const double e = energy(g, theta);
        if (!std::isfinite(e)) {
          throw NumericalError("non-finite energy at iteration " +
                               std::to_string(iter));
        }
        trace.rows.push_back(
            {iter, e, grad_norm, order_parameter(theta).magnitude});
      }
    }
    if (stop) break;
    theta.theta -= cfg.step * grad;
    ++iter;
  }

  DescentOutcome out;
  out.final_energy = energy(g, theta);
  if (!std::isfinite(out.final_energy)) {
    throw NumericalError("non-finite energy at iteration " +
                         std::to_string(iter));
  }
  out.final_grad_norm = grad_norm;
  out.iterations = iter;
  out.stopped_by = grad_norm <= cfg.grad_tol ? StopReason::GradientTol
                                             : StopReason::MaxIters;
  const OrderParameter r = order_parameter(theta);
  out.classification = r.magnitude >= (1.0 - cfg.align_tol) * g.size()
                           ? Classification::Global
                           : Classification::NonGlobal;
  out.final_theta = std::move(theta);
  return {std::move(out), std::move(trace)};
}

int multi_restart(const WeightedGraph& g, int trials, std::uint64_t base_seed,
                  const DescentConfig& cfg, int threads) {
  if (trials < 1) throw ValidationError("trials must be positive");
  cfg.validate();
  std::vector<char> global(trials, 0);
  detail::parallel_for_index(trials, threads, [&](int t) {
    const PhaseState init =
        random_init(g.size(), derive_seed(base_seed, static_cast<std::uint64_t>(t)));
    try {
      global[t] =
          descend(g, init, cfg).first.classification == Classification::Global;
    } catch (const NumericalError& e) {
      throw NumericalError("trial " + std::to_string(t) + ": " + e.what());
    }
  });
  int successes = 0;
  for (char c : global) successes += c;
  return successes;
}

Classification classify_energy(const WeightedGraph& g, double energy_value,
                               double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  return energy_value <= epsilon * 2.0 * g.total_weight()
             ? Classification::Global
             : Classification::NonGlobal;
}

const char* to_string(StopReason r) {
  return r == StopReason::GradientTol ? "gradient_tol" : "max_iters";
}

const char* to_string(Classification c) {
  return c == Classification::Global ? "global" : "non_global";
}

}  // namespace synclab
