#include "synclab/harness.hpp"

#include "synclab/errors.hpp"
#include "synclab/rng.hpp"

#include "parallel.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>

namespace synclab {

void GridSpec::validate() const {
  if (n_values.empty()) throw ValidationError("grid has no n values");
  for (int n : n_values) {
    if (n < 2) throw ValidationError("grid n values must be >= 2");
  }
  if (p_or_c.empty()) throw ValidationError("grid has no p values");
  for (double v : p_or_c) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError("grid p values must be finite and nonnegative");
    }
    if (p_rule == PRule::Absolute && v > 1.0) {
      throw ValidationError("absolute p values must lie in [0, 1]");
    }
  }
  if (trials < 1) throw ValidationError("trials must be positive");
  config.validate();
}

std::uint64_t cell_seed_for(std::uint64_t base_seed, int n, double p) {
  const std::uint64_t mixed_n = derive_seed(base_seed, static_cast<std::uint64_t>(n));
  return derive_seed(mixed_n, std::bit_cast<std::uint64_t>(p));
}

std::vector<CellPlan> expand_grid(const GridSpec& spec) {
  spec.validate();
  std::vector<CellPlan> cells;
  cells.reserve(spec.n_values.size() * spec.p_or_c.size());
  for (int n : spec.n_values) {
    for (double v : spec.p_or_c) {
      double p = spec.p_rule == PRule::Absolute ? v : v * std::log(n) / n;
      const bool clamped = p > 1.0;
      if (clamped) p = 1.0;
      cells.push_back({n, p, cell_seed_for(spec.base_seed, n, p), clamped});
    }
  }
  return cells;
}

PhaseCell run_cell(int n, double p, int trials, std::uint64_t cell_seed,
                   const DescentConfig& cfg, bool fixed_graph) {
  if (trials < 1) throw ValidationError("trials must be positive");
  PhaseCell cell;
  cell.n = n;
  cell.p = p;
  cell.trials = trials;
  cell.seed = cell_seed;
  std::optional<WeightedGraph> shared;
  if (fixed_graph) shared = gen_er(n, p, derive_seed(cell_seed, 0));
  for (int t = 0; t < trials; ++t) {
    // Sub-seed 2t draws the graph, 2t+1 the initialization, so fixed-graph
    // runs see the same initializations as fresh-graph runs.
    const std::uint64_t init_seed =
        derive_seed(cell_seed, 2 * static_cast<std::uint64_t>(t) + 1);
    try {
      std::optional<WeightedGraph> fresh;
      if (!shared) {
        fresh = gen_er(n, p,
                       derive_seed(cell_seed, 2 * static_cast<std::uint64_t>(t)));
      }
      const WeightedGraph& g = shared ? *shared : *fresh;
      const PhaseState init = random_init(n, init_seed);
      if (descend(g, init, cfg).first.classification == Classification::Global) {
        ++cell.successes;
      }
    } catch (const NumericalError& e) {
      throw NumericalError("cell (n=" + std::to_string(n) +
                           ", p=" + std::to_string(p) + ") trial " +
                           std::to_string(t) + " (seed " +
                           std::to_string(init_seed) + "): " + e.what());
    }
  }
  cell.fraction = static_cast<double>(cell.successes) / trials;
  return cell;
}

std::vector<PhaseCell> run_grid(const GridSpec& spec, int threads) {
  const std::vector<CellPlan> plans = expand_grid(spec);
  std::vector<PhaseCell> cells(plans.size());
  detail::parallel_for_index(
      static_cast<int>(plans.size()), threads, [&](int i) {
        const CellPlan& plan = plans[i];
        cells[i] = run_cell(plan.n, plan.p, spec.trials, plan.seed, spec.config,
                            spec.fixed_graph);
        cells[i].p_clamped = plan.p_clamped;
      });
  return cells;
}

void write_phase_table(const std::vector<PhaseCell>& cells, std::ostream& out) {
  out << "n,p,trials,successes,fraction,seed\n";
  out << std::setprecision(17);
  for (const PhaseCell& cell : cells) {
    out << cell.n << "," << cell.p << "," << cell.trials << ","
        << cell.successes << "," << cell.fraction << "," << cell.seed << "\n";
  }
}

void write_phase_table(const std::vector<PhaseCell>& cells,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  write_phase_table(cells, out);
  if (!out) throw ValidationError("write failed for " + path.string());
}

std::vector<ReferenceCurveRow> reference_curves(const std::vector<int>& n_values) {
  std::vector<ReferenceCurveRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    if (n < 2) throw ValidationError("curve n values must be >= 2");
    const double base = std::log(n) / n;
    rows.push_back({n, base, 2.0 * base});
  }
  return rows;
}

void write_reference_curves(const std::vector<ReferenceCurveRow>& rows,
                            std::ostream& out) {
  out << "n,log_n_over_n,two_log_n_over_n\n";
  out << std::setprecision(17);
  for (const ReferenceCurveRow& row : rows) {
    out << row.n << "," << row.log_n_over_n << "," << row.two_log_n_over_n
        << "\n";
  }
}

}  // namespace synclab
