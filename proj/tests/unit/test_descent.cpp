#include "synclab/descent.hpp"

#include "synclab/errors.hpp"
#include "synclab/rng.hpp"
#include "synclab/spectral.hpp"

#include <doctest.h>

#include "test_helpers.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace synclab;
using namespace synclab::testing;

TEST_CASE("random_init is deterministic and in range") {
  const PhaseState a = random_init(5, 1);
  const PhaseState b = random_init(5, 1);
  CHECK(exact_equal(a.theta, b.theta));
  CHECK_FALSE(exact_equal(a.theta, random_init(5, 2).theta));

  const PhaseState single = random_init(1, 9);
  CHECK(single.theta(0) >= 0.0);
  CHECK(single.theta(0) < 2.0 * std::numbers::pi);

  // Uniform-mean concentration: sample mean within 5 sd of pi, where the
  // sd of the mean is (2 pi / sqrt(12)) / sqrt(n).
  const int n = 10000;
  const PhaseState big = random_init(n, 123);
  const double bound = 5.0 * (2.0 * std::numbers::pi / std::sqrt(12.0 * n));
  CHECK(std::abs(big.theta.mean() - std::numbers::pi) <= bound);
  for (int i = 0; i < n; ++i) {
    CHECK(big.theta(i) >= 0.0);
    CHECK(big.theta(i) < 2.0 * std::numbers::pi);
  }
}

TEST_CASE("config validation") {
  DescentConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.step = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = {};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = {};
  cfg.align_tol = 1.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = {};
  cfg.grad_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
}

TEST_CASE("descent from a small perturbation of the aligned state") {
  const WeightedGraph g = gen_path(10);
  PhaseState init(Vector::Constant(10, 0.7));
  SplitMix64 rng(5);
  for (int i = 0; i < 10; ++i) init.theta(i) += 0.01 * rng.uniform();

  DescentConfig cfg;
  cfg.max_iters = 20000;
  const auto [outcome, trace] = descend(g, init, cfg);
  CHECK(outcome.classification == Classification::Global);
  CHECK(outcome.final_energy <= 1e-12);
}

TEST_CASE("descent stops immediately at a critical initial state") {
  const WeightedGraph g = gen_wsg(20, 1);
  const PhaseState init = twisted_state(20);
  const auto [outcome, trace] = descend(g, init, {});
  CHECK(outcome.iterations == 0);
  CHECK(outcome.stopped_by == StopReason::GradientTol);
  CHECK(outcome.classification == Classification::NonGlobal);
  CHECK(exact_equal(outcome.final_theta.theta, init.theta));
}

TEST_CASE("complete graphs always synchronize") {
  DescentConfig cfg;
  cfg.max_iters = 20000;
  CHECK(multi_restart(gen_complete(30), 20, 7, cfg) == 20);
}

TEST_CASE("trace starts at iteration 0 and energy is non-increasing") {
  const WeightedGraph g = gen_path(8);
  DescentConfig cfg;
  cfg.trace_every = 1;
  cfg.max_iters = 500;
  const auto [outcome, trace] = descend(g, random_init(8, 3), cfg);
  REQUIRE_FALSE(trace.rows.empty());
  CHECK(trace.rows.front().iteration == 0);
  for (std::size_t i = 1; i < trace.rows.size(); ++i) {
    CHECK(trace.rows[i].iteration > trace.rows[i - 1].iteration);
    CHECK(trace.rows[i].energy <= trace.rows[i - 1].energy + 1e-12);
  }
  CHECK(trace.rows.back().iteration == outcome.iterations);
}

TEST_CASE("sparse traces keep the first and last iterations") {
  const WeightedGraph g = gen_cycle(12);
  DescentConfig cfg;
  cfg.trace_every = 7;
  cfg.max_iters = 25;
  cfg.grad_tol = 1e-300;  // force the iteration cap
  const auto [outcome, trace] = descend(g, random_init(12, 8), cfg);
  CHECK(outcome.stopped_by == StopReason::MaxIters);
  CHECK(outcome.iterations == 25);
  REQUIRE(trace.rows.size() == 5);  // 0, 7, 14, 21, 25
  CHECK(trace.rows.front().iteration == 0);
  CHECK(trace.rows.back().iteration == 25);
}

TEST_CASE("non-finite initial states are reported as numerical errors") {
  const WeightedGraph g = gen_path(4);
  PhaseState bad(Vector::Zero(4));
  bad.theta(2) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(descend(g, bad, {}), NumericalError);
}

TEST_CASE("dimension mismatch is a shape error") {
  CHECK_THROWS_AS(descend(gen_path(4), random_init(5, 0), {}), ShapeError);
}

TEST_CASE("multi_restart is deterministic across thread counts") {
  const WeightedGraph g = gen_er(25, 0.4, 99);
  DescentConfig cfg;
  cfg.max_iters = 2000;
  const int serial = multi_restart(g, 24, 11, cfg, 1);
  CHECK(multi_restart(g, 24, 11, cfg, 4) == serial);
  CHECK(multi_restart(g, 24, 11, cfg, 16) == serial);
}

TEST_CASE("disconnected graphs rarely align globally") {
  DescentConfig cfg;
  cfg.max_iters = 5000;
  const int successes = multi_restart(two_disjoint_edges(), 50, 3, cfg);
  CHECK(successes < 50);
}

TEST_CASE("trees synchronize from random initializations") {
  DescentConfig cfg;
  cfg.max_iters = 20000;
  CHECK(multi_restart(gen_path(15), 10, 21, cfg) == 10);
}

TEST_CASE("energy-based secondary classifier agrees on converged instances") {
  DescentConfig cfg;
  cfg.max_iters = 20000;
  const WeightedGraph g = gen_er(40, 0.6, 13);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto [outcome, trace] = descend(g, random_init(40, seed), cfg);
    REQUIRE(outcome.classification == Classification::Global);
    CHECK(classify_energy(g, outcome.final_energy, 1e-4) ==
          Classification::Global);
  }
  // A twisted state on a sparse ring carries macroscopic energy.
  const WeightedGraph ring = gen_wsg(40, 1);
  CHECK(classify_energy(ring, energy(ring, twisted_state(40)), 1e-4) ==
        Classification::NonGlobal);
  CHECK_THROWS_AS(classify_energy(ring, 0.0, 0.0), ValidationError);
}

TEST_CASE("global outcomes carry near-minimal energy on benign graphs") {
  DescentConfig cfg;
  cfg.max_iters = 20000;
  for (const WeightedGraph& g : {gen_complete(30), gen_er(30, 0.7, 4)}) {
    const double max_degree = g.degrees().maxCoeff();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto [outcome, trace] = descend(g, random_init(30, 100 + seed), cfg);
      if (outcome.classification != Classification::Global) continue;
      CHECK(outcome.final_energy <= 10.0 * cfg.align_tol * 30 * max_degree);
    }
  }
}
