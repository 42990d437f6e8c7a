#pragma once

#include "synclab/descent.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace synclab {

// How the p axis of a sweep is specified: absolute probabilities, or
// multipliers c with p = c * log(n) / n evaluated per n.
enum class PRule { Absolute, LogScaled };

struct GridSpec {
  std::vector<int> n_values;
  PRule p_rule = PRule::Absolute;
  std::vector<double> p_or_c;
  int trials = 50;
  std::uint64_t base_seed = 0;
  DescentConfig config;
  bool fixed_graph = false;  // reuse one graph per cell, vary only the init

  void validate() const;
};

// One Monte-Carlo grid point.
struct PhaseCell {
  int n = 0;
  double p = 0.0;
  int trials = 0;
  int successes = 0;
  double fraction = 0.0;  // successes / trials
  std::uint64_t seed = 0; // the cell's derived seed
  bool p_clamped = false; // evaluated p exceeded 1 and was clamped
};

// Parameters of one cell before execution.
struct CellPlan {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  bool p_clamped = false;
};

// Seed for the (n, p) cell, derived from the cell's own parameters rather
// than its position, so removing a cell from a grid never changes any
// other cell.
std::uint64_t cell_seed_for(std::uint64_t base_seed, int n, double p);

// Expands a spec into the deterministic (n outer, p inner) cell list.
std::vector<CellPlan> expand_grid(const GridSpec& spec);

// Runs `trials` independent instances: each trial draws a fresh graph and a
// fresh initialization from sub-seeds of cell_seed (or reuses one graph
// when fixed_graph), descends, and counts Global outcomes. Deterministic in
// cell_seed regardless of parallelism.
PhaseCell run_cell(int n, double p, int trials, std::uint64_t cell_seed,
                   const DescentConfig& cfg, bool fixed_graph = false);

// All cells of the spec, in expand_grid order. `threads` parallelizes over
// cells; the output is bitwise identical for any worker count.
std::vector<PhaseCell> run_grid(const GridSpec& spec, int threads = 1);

// Delimited text with header "n,p,trials,successes,fraction,seed". Reals
// are written with round-trip precision.
void write_phase_table(const std::vector<PhaseCell>& cells, std::ostream& out);
void write_phase_table(const std::vector<PhaseCell>& cells,
                       const std::filesystem::path& path);

struct ReferenceCurveRow {
  int n = 0;
  double log_n_over_n = 0.0;
  double two_log_n_over_n = 0.0;
};

// The connectivity-threshold curves p = log(n)/n and p = 2 log(n)/n,
// emitted alongside phase tables for plotting.
std::vector<ReferenceCurveRow> reference_curves(const std::vector<int>& n_values);

void write_reference_curves(const std::vector<ReferenceCurveRow>& rows,
                            std::ostream& out);

}  // namespace synclab
