#include "synclab/certify.hpp"

#include "synclab/descent.hpp"
#include "synclab/errors.hpp"
#include "synclab/spectral.hpp"

#include <doctest.h>

#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace synclab;
using namespace synclab::testing;

TEST_CASE("quadrant certificate") {
  const WeightedGraph g = gen_cycle(9);
  const Certificate aligned =
      check_quadrant(g, PhaseState(Vector::Constant(9, 2.0)));
  CHECK(aligned.holds);
  CHECK(aligned.witness.at("max_abs_sin") == 0.0);

  const Certificate degenerate =
      check_quadrant(gen_wsg(20, 1), twisted_state(20));
  CHECK_FALSE(degenerate.holds);
  CHECK(degenerate.notes == "order parameter degenerate");

  const Certificate split = check_quadrant(
      two_disjoint_edges(), PhaseState(Vector::Constant(4, 0.0)));
  CHECK_FALSE(split.holds);
  CHECK(split.notes == "graph disconnected");
}

TEST_CASE("quadrant certificate holds at converged dense-graph minima") {
  const WeightedGraph g = gen_er(200, 0.5, 3);
  DescentConfig cfg;
  cfg.max_iters = 20000;
  const auto [outcome, trace] = descend(g, random_init(200, 17), cfg);
  REQUIRE(outcome.classification == Classification::Global);
  const Certificate cert = check_quadrant(g, outcome.final_theta);
  CHECK(cert.holds);
  CHECK(cert.witness.at("max_abs_sin") < 0.1);
}

TEST_CASE("dense-degree certificate") {
  const Certificate complete = check_min_degree(gen_complete(10));
  CHECK(complete.holds);
  CHECK(complete.witness.at("mu") == 1.0);
  CHECK(complete.witness.at("threshold") ==
        doctest::Approx((3.0 - std::sqrt(2.0)) / 2.0).epsilon(1e-16));

  const Certificate ring = check_min_degree(gen_wsg(10, 4));
  CHECK(ring.holds);
  CHECK(ring.witness.at("mu") == doctest::Approx(8.0 / 9.0));

  const Certificate cycle = check_min_degree(gen_cycle(10));
  CHECK_FALSE(cycle.holds);
  CHECK(cycle.witness.at("mu") == doctest::Approx(2.0 / 9.0));

  // Exactly when 2k >= ceil(threshold * (n-1)).
  const double threshold = (3.0 - std::sqrt(2.0)) / 2.0;
  for (int n : {11, 20, 33}) {
    for (int k = 1; 2 * k <= n - 1; ++k) {
      CHECK(check_min_degree(gen_wsg(n, k)).holds ==
            (2.0 * k >= threshold * (n - 1)));
    }
  }
}

TEST_CASE("density regime evaluation") {
  const ErRegime big = er_regime(1000000, 1.0);
  CHECK(big.p == doctest::Approx(4.420963378548568).epsilon(1e-12));
  CHECK(big.vacuous);

  const ErRegime huge = er_regime(1000000000000, 1.0);
  // n = 1e12: 32 log(n) / n^{1/3} = 32 * 27.6310... / 1e4.
  CHECK(huge.p == doctest::Approx(0.08841926757097135).epsilon(1e-12));
  CHECK_FALSE(huge.vacuous);
  // At gamma = 1 the trailing 10 n^{1-gamma} term is exactly 10, so the
  // success bound is 1 - 0 - 10 = -9: vacuous at any size.
  CHECK(huge.prob_bound == doctest::Approx(-9.0).epsilon(1e-12));
  const ErRegime confident = er_regime(1000000000000, 2.0);
  CHECK(confident.p == doctest::Approx(2.0 * 0.08841926757097135).epsilon(1e-12));
  CHECK(confident.prob_bound > 0.999);
  CHECK(confident.prob_bound <= 1.0);

  // p is exactly linear in gamma.
  for (int n : {100, 5000}) {
    CHECK(er_regime(n, 2.0).p == 2.0 * er_regime(n, 1.0).p);
  }

  CHECK_THROWS_AS(er_regime(1, 1.0), ValidationError);
  CHECK_THROWS_AS(er_regime(100, 0.5), ValidationError);
}

TEST_CASE("deviation bound on random graphs") {
  int holds = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    holds += deviation_bound(gen_er(300, 0.2, seed), 0.2, 2.0).holds;
  }
  CHECK(holds == 10);
}

TEST_CASE("deviation bound edge cases") {
  // Complete graph against p near 1: the centered matrix is almost zero.
  const Certificate near_one =
      deviation_bound(gen_complete(50), 1.0 - 1e-9, 2.0);
  CHECK(near_one.holds);
  CHECK(near_one.witness.at("spectral_norm") <= 1e-6);

  // Empty graph against p = 1/2: || -p (J - I) || = p (n - 1) dominates.
  const WeightedGraph empty(Matrix::Zero(50, 50));
  const Certificate cert = deviation_bound(empty, 0.5, 2.0);
  CHECK_FALSE(cert.holds);
  CHECK(cert.witness.at("spectral_norm") ==
        doctest::Approx(0.5 * 49).epsilon(1e-9));

  CHECK_THROWS_AS(deviation_bound(empty, 0.0, 2.0), ValidationError);
  CHECK_THROWS_AS(deviation_bound(empty, 1.0, 2.0), ValidationError);
  const WeightedGraph weighted =
      WeightedGraph::from_edges(3, {{0, 1, 0.5}});
  CHECK_THROWS_AS(deviation_bound(weighted, 0.5, 2.0), ValidationError);
}

TEST_CASE("isometry ratios at the aligned state") {
  const WeightedGraph g = gen_er(40, 0.3, 5);
  const PhaseState aligned(Vector::Constant(40, 1.1));
  const auto [hadamard, linear] = rip_ratios(g, 0.3, aligned);
  // Both inner products collapse to sum_{i != j} (a_ij - p) over p n^2.
  double centered_sum = 0.0;
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) {
      if (i != j) centered_sum += g.weight(i, j) - 0.3;
    }
  }
  const double expected = std::abs(centered_sum) / (0.3 * 40.0 * 40.0);
  CHECK(hadamard == doctest::Approx(expected).epsilon(1e-9));
  CHECK(linear == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("isometry probe") {
  const Certificate cert = rip_probe(gen_er(150, 0.5, 9), 0.5, 0.2, 100, 4);
  CHECK(cert.holds);
  CHECK(cert.witness.at("max_ratio_hadamard") <= 0.2);
  CHECK(cert.witness.at("max_ratio_linear") <= 0.2);

  // Determinism.
  const Certificate again = rip_probe(gen_er(150, 0.5, 9), 0.5, 0.2, 100, 4);
  CHECK(again.witness.at("max_ratio_hadamard") ==
        cert.witness.at("max_ratio_hadamard"));
  CHECK(again.witness.at("max_ratio_linear") ==
        cert.witness.at("max_ratio_linear"));

  // delta = 1 is allowed and holds empirically on dense draws.
  CHECK(rip_probe(gen_er(60, 0.5, 2), 0.5, 1.0, 200, 1).holds);

  CHECK_THROWS_AS(rip_probe(gen_er(20, 0.5, 0), 0.5, 0.0, 10, 0),
                  ValidationError);
  CHECK_THROWS_AS(rip_probe(gen_er(20, 0.5, 0), 1.5, 0.2, 10, 0),
                  ValidationError);
}

TEST_CASE("first-order residual") {
  const WeightedGraph g = gen_wsg(24, 2);
  CHECK(first_order_residual(g, PhaseState(Vector::Constant(24, 0.4))) == 0.0);
  CHECK(first_order_residual(g, twisted_state(24)) <= 1e-12 * 24);

  Vector quarter(2);
  quarter << 0.0, std::numbers::pi / 2;
  CHECK(first_order_residual(gen_path(2), PhaseState(quarter)) ==
        doctest::Approx(1.0).epsilon(1e-15));
}
