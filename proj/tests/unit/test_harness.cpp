#include "synclab/harness.hpp"

#include "synclab/errors.hpp"

#include <doctest.h>

#include "test_helpers.hpp"

#include <cmath>
#include <sstream>

using namespace synclab;

namespace {

GridSpec small_spec() {
  GridSpec spec;
  spec.n_values = {6, 8, 10};
  spec.p_rule = PRule::Absolute;
  spec.p_or_c = {0.3, 0.6, 1.0};
  spec.trials = 5;
  spec.base_seed = 12;
  spec.config.max_iters = 500;
  return spec;
}

bool cells_equal(const std::vector<PhaseCell>& a,
                 const std::vector<PhaseCell>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].n != b[i].n || a[i].p != b[i].p || a[i].trials != b[i].trials ||
        a[i].successes != b[i].successes || a[i].fraction != b[i].fraction ||
        a[i].seed != b[i].seed || a[i].p_clamped != b[i].p_clamped) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("spec validation") {
  GridSpec spec = small_spec();
  CHECK_NOTHROW(spec.validate());
  spec.trials = 0;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  spec = small_spec();
  spec.n_values = {1};
  CHECK_THROWS_AS(spec.validate(), ValidationError);
  spec = small_spec();
  spec.p_or_c = {1.2};
  CHECK_THROWS_AS(spec.validate(), ValidationError);  // absolute p above 1
  spec = small_spec();
  spec.p_or_c = {-0.1};
  CHECK_THROWS_AS(spec.validate(), ValidationError);
}

TEST_CASE("grid expansion") {
  // The small-system sweep: n = 5..100 step 5, p = 0..1 step 0.02.
  GridSpec spec;
  for (int n = 5; n <= 100; n += 5) spec.n_values.push_back(n);
  for (int i = 0; i <= 50; ++i) spec.p_or_c.push_back(0.02 * i);
  spec.p_rule = PRule::Absolute;
  CHECK(expand_grid(spec).size() == 20 * 51);

  // The large-system sweep: n = 100..1500 step 50, c = 0..4 step 0.1.
  GridSpec large;
  for (int n = 100; n <= 1500; n += 50) large.n_values.push_back(n);
  for (int i = 0; i <= 40; ++i) large.p_or_c.push_back(0.1 * i);
  large.p_rule = PRule::LogScaled;
  const auto cells = expand_grid(large);
  CHECK(cells.size() == 29 * 41);
  for (const CellPlan& cell : cells) {
    CHECK(cell.p >= 0.0);
    CHECK(cell.p <= 1.0);
  }

  // Log-scaled multipliers above n / log(n) clamp to 1 and are flagged.
  GridSpec clamped;
  clamped.n_values = {5};
  clamped.p_rule = PRule::LogScaled;
  clamped.p_or_c = {4.0};  // 4 log(5)/5 = 1.287...
  const auto one = expand_grid(clamped);
  REQUIRE(one.size() == 1);
  CHECK(one[0].p == 1.0);
  CHECK(one[0].p_clamped);
}

TEST_CASE("run_cell extremes") {
  DescentConfig cfg;  // the protocol defaults
  const PhaseCell dense = run_cell(20, 1.0, 50, cell_seed_for(1, 20, 1.0), cfg);
  CHECK(dense.successes == 50);
  CHECK(dense.fraction == 1.0);

  const PhaseCell empty = run_cell(20, 0.0, 50, cell_seed_for(1, 20, 0.0), cfg);
  CHECK(empty.fraction < 0.5);  // isolated vertices stay misaligned
}

TEST_CASE("run_cell is deterministic and matches the 1x1 grid") {
  GridSpec spec = small_spec();
  spec.n_values = {12};
  spec.p_or_c = {0.5};
  const auto cells = run_grid(spec);
  REQUIRE(cells.size() == 1);
  const PhaseCell direct =
      run_cell(12, 0.5, spec.trials, cell_seed_for(spec.base_seed, 12, 0.5),
               spec.config);
  CHECK(cells[0].n == direct.n);
  CHECK(cells[0].p == direct.p);
  CHECK(cells[0].successes == direct.successes);
  CHECK(cells[0].seed == direct.seed);
}

TEST_CASE("run_grid is identical across worker counts") {
  const GridSpec spec = small_spec();
  const auto serial = run_grid(spec, 1);
  CHECK(cells_equal(run_grid(spec, 4), serial));
  CHECK(cells_equal(run_grid(spec, 16), serial));
}

TEST_CASE("cell results do not depend on the surrounding grid") {
  GridSpec spec = small_spec();
  const auto full = run_grid(spec);
  GridSpec reduced = small_spec();
  reduced.p_or_c = {0.3, 1.0};  // drop the middle column
  const auto sparse = run_grid(reduced);
  REQUIRE(full.size() == 9);
  REQUIRE(sparse.size() == 6);
  for (const PhaseCell& cell : sparse) {
    bool found = false;
    for (const PhaseCell& other : full) {
      if (other.n == cell.n && other.p == cell.p) {
        found = true;
        CHECK(other.successes == cell.successes);
        CHECK(other.seed == cell.seed);
      }
    }
    CHECK(found);
  }
}

TEST_CASE("fixed-graph cells differ only in the graph draw") {
  GridSpec spec = small_spec();
  spec.n_values = {10};
  spec.p_or_c = {0.4};
  spec.fixed_graph = true;
  const auto fixed = run_grid(spec);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0].trials == spec.trials);
}

TEST_CASE("success fraction rises with density at fixed n") {
  // Statistical check on the default protocol seed: the fraction at
  // p = 4 log(n)/n dominates the fraction at p = 0.5 log(n)/n.
  const int n = 100;
  const DescentConfig cfg;  // paper protocol: 0.005, 1000, 1e-8
  const double low_p = 0.5 * std::log(n) / n;
  const double high_p = 4.0 * std::log(n) / n;
  const PhaseCell low = run_cell(n, low_p, 50, cell_seed_for(42, n, low_p), cfg);
  const PhaseCell high =
      run_cell(n, high_p, 50, cell_seed_for(42, n, high_p), cfg);
  CHECK(high.fraction >= low.fraction);
}

TEST_CASE("phase table output") {
  std::vector<PhaseCell> cells;
  cells.push_back({10, 0.25, 50, 42, 0.84, 777, false});
  cells.push_back({20, 0.1, 50, 7, 0.14, 778, false});
  cells.push_back({30, 1.0, 50, 50, 1.0, 779, true});
  std::ostringstream out;
  write_phase_table(cells, out);

  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,p,trials,successes,fraction,seed");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    // fraction (5th field) parses back to exactly successes / trials
    std::istringstream fields(line);
    std::string token;
    for (int f = 0; f < 5; ++f) std::getline(fields, token, ',');
    CHECK(std::stod(token) == cells[rows - 1].fraction);
  }
  CHECK(rows == 3);
}

TEST_CASE("reference curves") {
  const auto rows = reference_curves({100});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 100);
  CHECK(rows[0].log_n_over_n == std::log(100.0) / 100.0);
  CHECK(rows[0].two_log_n_over_n == 2.0 * (std::log(100.0) / 100.0));
  CHECK(rows[0].log_n_over_n == doctest::Approx(0.046052).epsilon(1e-4));
  CHECK(rows[0].two_log_n_over_n == doctest::Approx(0.092103).epsilon(1e-4));

  std::ostringstream out;
  write_reference_curves(rows, out);
  CHECK(out.str().substr(0, 31) == "n,log_n_over_n,two_log_n_over_n");
}
