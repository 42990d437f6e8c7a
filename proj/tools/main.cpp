// synclab: laboratory for the synchronization energy landscape of weighted
// networks. Subcommands generate graphs, run gradient-flow descent, sweep
// Monte-Carlo phase diagrams, evaluate twisted-state spectra, classify
// critical points, and check landscape certificates.

#include "synclab/certify.hpp"
#include "synclab/descent.hpp"
#include "synclab/errors.hpp"
#include "synclab/harness.hpp"
#include "synclab/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace synclab;

// Reproducibility header: resolved parameters, printed to stderr before any
// work so stdout stays a clean data stream.
void print_header(const std::string& command,
                  const std::vector<std::pair<std::string, std::string>>& params) {
  std::cerr << "# synclab " << command;
  for (const auto& [key, value] : params) std::cerr << " " << key << "=" << value;
  std::cerr << "\n";
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// "lo:hi:step" -> inclusive arithmetic progression.
std::vector<double> parse_range(const std::string& text) {
  std::istringstream in(text);
  double lo, hi, step;
  char c1, c2;
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      (in >> std::ws, !in.eof())) {
    throw ValidationError("expected range in the form lo:hi:step");
  }
  if (!(step > 0.0) || hi < lo) throw ValidationError("bad range " + text);
  const double raw_count = (hi - lo) / step + 1e-9;
  if (raw_count > 100000) throw ValidationError("range " + text + " is too fine");
  std::vector<double> values;
  const int count = static_cast<int>(raw_count) + 1;
  for (int i = 0; i < count; ++i) {
    values.push_back(std::min(lo + i * step, hi));
  }
  return values;
}

// Writes data to --out if given, else stdout.
class DataSink {
 public:
  explicit DataSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ValidationError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish(const std::string& path) {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw ValidationError("write failed for " + path);
    }
  }

 private:
  std::ofstream file_;
};

void print_certificate(const Certificate& cert) {
  std::cout << cert.name << ": " << (cert.holds ? "PASS" : "FAIL") << "\n";
  for (const auto& [key, value] : cert.witness) {
    std::cout << key << "=" << fmt(value) << "\n";
  }
  if (!cert.notes.empty()) std::cout << "note=" << cert.notes << "\n";
}

struct GenOptions {
  std::string type;
  int n = 0;
  int k = 1;
  double p = 0.5;
  std::uint64_t seed = 42;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  print_header("gen", {{"type", opt.type},
                       {"n", std::to_string(opt.n)},
                       {"k", std::to_string(opt.k)},
                       {"p", fmt(opt.p)},
                       {"seed", std::to_string(opt.seed)}});
  std::optional<WeightedGraph> g;
  if (opt.type == "path") {
    g = gen_path(opt.n);
  } else if (opt.type == "cycle") {
    g = gen_cycle(opt.n);
  } else if (opt.type == "wsg") {
    g = gen_wsg(opt.n, opt.k);
  } else if (opt.type == "complete") {
    g = gen_complete(opt.n);
  } else if (opt.type == "er") {
    g = gen_er(opt.n, opt.p, opt.seed);
  } else if (opt.type == "bipartite-wsg") {
    g = gen_bipartite_wsg(opt.n, opt.k);
  } else {
    throw ValidationError("unknown graph type " + opt.type);
  }
  DataSink sink(opt.out);
  save_edge_list(*g, sink.stream());
  sink.finish(opt.out);
  std::cerr << "# vertices=" << g->size() << " edges=" << g->edge_count()
            << " min_degree=" << g->degrees().minCoeff()
            << " connected=" << is_connected(*g) << "\n";
  return 0;
}

struct DescendOptions {
  std::string graph_path;
  std::string theta_path;
  std::uint64_t seed = 42;
  DescentConfig cfg;
  std::string out;
  std::string save_theta;
};

int run_descend(const DescendOptions& opt) {
  print_header("descend",
               {{"graph", opt.graph_path},
                {"init", opt.theta_path.empty() ? "random" : opt.theta_path},
                {"seed", std::to_string(opt.seed)},
                {"step", fmt(opt.cfg.step)},
                {"max_iters", std::to_string(opt.cfg.max_iters)},
                {"grad_tol", fmt(opt.cfg.grad_tol)},
                {"align_tol", fmt(opt.cfg.align_tol)},
                {"trace_every", std::to_string(opt.cfg.trace_every)}});
  const WeightedGraph g = load_edge_list(opt.graph_path);
  const PhaseState init = opt.theta_path.empty()
                              ? random_init(g.size(), opt.seed)
                              : load_phase_state(opt.theta_path);
  const auto [outcome, trace] = descend(g, init, opt.cfg);
  DataSink sink(opt.out);
  std::ostream& out = sink.stream();
  out << "iter,energy,grad_norm,order_mag\n" << std::setprecision(17);
  for (const TraceRow& row : trace.rows) {
    out << row.iteration << "," << row.energy << "," << row.grad_norm << ","
        << row.order_magnitude << "\n";
  }
  sink.finish(opt.out);
  if (!opt.save_theta.empty()) save_phase_state(outcome.final_theta, opt.save_theta);
  std::cerr << "# iterations=" << outcome.iterations
            << " stopped_by=" << to_string(outcome.stopped_by)
            << " final_energy=" << fmt(outcome.final_energy)
            << " final_grad_norm=" << fmt(outcome.final_grad_norm)
            << " classification=" << to_string(outcome.classification) << "\n";
  return 0;
}

struct PhaseOptions {
  int n_min = 5;
  int n_max = 100;
  int n_step = 5;
  std::string p_grid;
  std::string c_grid;
  int trials = 50;
  std::uint64_t seed = 42;
  int threads = 1;
  bool fixed_graph = false;
  DescentConfig cfg;
  std::string out;
  std::string curves_out;
};

int run_phase(const PhaseOptions& opt) {
  if (opt.p_grid.empty() == opt.c_grid.empty()) {
    throw ValidationError("exactly one of --p-grid and --c-grid is required");
  }
  print_header("phase", {{"n_min", std::to_string(opt.n_min)},
                         {"n_max", std::to_string(opt.n_max)},
                         {"n_step", std::to_string(opt.n_step)},
                         {"p_grid", opt.p_grid.empty() ? "-" : opt.p_grid},
                         {"c_grid", opt.c_grid.empty() ? "-" : opt.c_grid},
                         {"trials", std::to_string(opt.trials)},
                         {"seed", std::to_string(opt.seed)},
                         {"threads", std::to_string(opt.threads)},
                         {"fixed_graph", opt.fixed_graph ? "1" : "0"},
                         {"step", fmt(opt.cfg.step)},
                         {"max_iters", std::to_string(opt.cfg.max_iters)},
                         {"grad_tol", fmt(opt.cfg.grad_tol)},
                         {"align_tol", fmt(opt.cfg.align_tol)}});
  if (opt.n_step < 1) throw ValidationError("--n-step must be positive");
  GridSpec spec;
  for (int n = opt.n_min; n <= opt.n_max; n += opt.n_step) {
    spec.n_values.push_back(n);
  }
  spec.p_rule = opt.p_grid.empty() ? PRule::LogScaled : PRule::Absolute;
  spec.p_or_c = parse_range(opt.p_grid.empty() ? opt.c_grid : opt.p_grid);
  spec.trials = opt.trials;
  spec.base_seed = opt.seed;
  spec.config = opt.cfg;
  spec.fixed_graph = opt.fixed_graph;

  const std::vector<PhaseCell> cells = run_grid(spec, opt.threads);
  DataSink sink(opt.out);
  write_phase_table(cells, sink.stream());
  sink.finish(opt.out);

  const std::string curves_path =
      !opt.curves_out.empty() ? opt.curves_out
      : !opt.out.empty()      ? opt.out + ".curves"
                              : std::string();
  if (!curves_path.empty()) {
    std::ofstream curves(curves_path);
    if (!curves) throw ValidationError("cannot open " + curves_path + " for writing");
    write_reference_curves(reference_curves(spec.n_values), curves);
  }
  return 0;
}

struct TwistedOptions {
  int n = 0;
  int k_min = 1;
  int k_max = 0;
  std::string out;
};

int run_twisted(const TwistedOptions& opt) {
  const int k_max = opt.k_max > 0 ? opt.k_max : (opt.n - 1) / 2;
  print_header("twisted", {{"n", std::to_string(opt.n)},
                           {"k_min", std::to_string(opt.k_min)},
                           {"k_max", std::to_string(k_max)}});
  const std::vector<Lambda2Row> rows = wsg_lambda2_curve(opt.n, opt.k_min, k_max);
  DataSink sink(opt.out);
  std::ostream& out = sink.stream();
  out << "k,mu,lambda2_min\n" << std::setprecision(17);
  for (const Lambda2Row& row : rows) {
    out << row.k << "," << row.mu << "," << row.lambda2_min << "\n";
  }
  sink.finish(opt.out);
  return 0;
}

struct ClassifyOptions {
  std::string graph_path;
  std::string theta_path;
  double grad_tol = 1e-7;
  double eig_tol = 1e-8;
};

int run_classify(const ClassifyOptions& opt) {
  print_header("classify", {{"graph", opt.graph_path},
                            {"theta", opt.theta_path},
                            {"grad_tol", fmt(opt.grad_tol)},
                            {"eig_tol", fmt(opt.eig_tol)}});
  const WeightedGraph g = load_edge_list(opt.graph_path);
  const PhaseState s = load_phase_state(opt.theta_path);
  const CriticalPointReport report =
      classify_critical(g, s, opt.grad_tol, opt.eig_tol);
  std::cout << std::setprecision(17);
  std::cout << "n: " << g.size() << "\n";
  std::cout << "grad_inf_norm: " << report.grad_inf_norm << "\n";
  std::cout << "eig_min: " << report.hessian_eigs(0) << "\n";
  std::cout << "lambda2: " << report.lambda2 << "\n";
  std::cout << "eig_max: " << report.hessian_eigs(report.hessian_eigs.size() - 1)
            << "\n";
  std::cout << "verdict: " << to_string(report.verdict) << "\n";
  return 0;
}

struct CheckOptions {
  std::string graph_path;
  std::string theta_path;
  double p = 0.0;
  double gamma = 2.0;
  double delta = 0.0;
  int samples = 1000;
  std::uint64_t seed = 42;
  int regime_n = 0;
  double regime_gamma = 1.0;
};

int run_check(const CheckOptions& opt) {
  print_header("check", {{"graph", opt.graph_path},
                         {"theta", opt.theta_path.empty() ? "-" : opt.theta_path},
                         {"p", fmt(opt.p)},
                         {"gamma", fmt(opt.gamma)},
                         {"delta", fmt(opt.delta)},
                         {"samples", std::to_string(opt.samples)},
                         {"seed", std::to_string(opt.seed)}});
  const WeightedGraph g = load_edge_list(opt.graph_path);
  print_certificate(check_min_degree(g));
  if (!opt.theta_path.empty()) {
    const PhaseState s = load_phase_state(opt.theta_path);
    print_certificate(check_quadrant(g, s));
    std::cout << "first_order_residual=" << fmt(first_order_residual(g, s))
              << "\n";
  }
  if (opt.p > 0.0) {
    print_certificate(deviation_bound(g, opt.p, opt.gamma));
    if (opt.delta > 0.0) {
      print_certificate(rip_probe(g, opt.p, opt.delta, opt.samples, opt.seed));
    }
  }
  if (opt.regime_n > 0) {
    const ErRegime regime = er_regime(opt.regime_n, opt.regime_gamma);
    std::cout << "er_regime: " << (regime.vacuous ? "VACUOUS" : "OK") << "\n";
    std::cout << "n=" << regime.n << "\n";
    std::cout << "gamma=" << fmt(regime.gamma) << "\n";
    std::cout << "p=" << fmt(regime.p) << "\n";
    std::cout << "prob_bound=" << fmt(regime.prob_bound) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laboratory for the synchronization energy landscape of networks"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph and write its edge list");
  gen->add_option("--type", gen_opt.type,
                  "Graph family: path, cycle, wsg, complete, er, bipartite-wsg")
      ->required();
  gen->add_option("--n", gen_opt.n, "Vertex count")->required();
  gen->add_option("--k", gen_opt.k, "Ring neighbors per side (wsg, bipartite-wsg)")
      ->capture_default_str();
  gen->add_option("--p", gen_opt.p, "Edge probability (er)")->capture_default_str();
  gen->add_option("--seed", gen_opt.seed, "Random seed (er)")->capture_default_str();
  gen->add_option("--out", gen_opt.out, "Output path (default: stdout)");

  DescendOptions descend_opt;
  CLI::App* descend_cmd =
      app.add_subcommand("descend", "Run gradient descent on the energy");
  descend_cmd->add_option("--graph", descend_opt.graph_path, "Edge-list file")
      ->required();
  descend_cmd->add_option("--theta", descend_opt.theta_path,
                          "Initial angles file (default: random)");
  descend_cmd->add_option("--seed", descend_opt.seed, "Random init seed")
      ->capture_default_str();
  descend_cmd->add_option("--step", descend_opt.cfg.step, "Step size")
      ->capture_default_str();
  descend_cmd->add_option("--max-iters", descend_opt.cfg.max_iters,
                          "Iteration cap")
      ->capture_default_str();
  descend_cmd->add_option("--grad-tol", descend_opt.cfg.grad_tol,
                          "Stop when ||grad|| falls below this")
      ->capture_default_str();
  descend_cmd->add_option("--align-tol", descend_opt.cfg.align_tol,
                          "Success threshold on 1 - ||r||/n")
      ->capture_default_str();
  descend_opt.cfg.trace_every = 1;
  descend_cmd->add_option("--trace-every", descend_opt.cfg.trace_every,
                          "Trace row period (0 = none)")
      ->capture_default_str();
  descend_cmd->add_option("--out", descend_opt.out, "Trace output path");
  descend_cmd->add_option("--save-theta", descend_opt.save_theta,
                          "Write the final angles to this file");

  PhaseOptions phase_opt;
  CLI::App* phase = app.add_subcommand("phase", "Monte-Carlo phase-transition sweep");
  phase->add_option("--n-min", phase_opt.n_min, "Smallest n")->capture_default_str();
  phase->add_option("--n-max", phase_opt.n_max, "Largest n")->capture_default_str();
  phase->add_option("--n-step", phase_opt.n_step, "n increment")->capture_default_str();
  phase->add_option("--p-grid", phase_opt.p_grid, "Absolute p grid lo:hi:step");
  phase->add_option("--c-grid", phase_opt.c_grid,
                    "Multiplier grid lo:hi:step with p = c log(n)/n");
  phase->add_option("--trials", phase_opt.trials, "Instances per cell")
      ->capture_default_str();
  phase->add_option("--seed", phase_opt.seed, "Base seed")->capture_default_str();
  phase->add_option("--threads", phase_opt.threads, "Worker threads")
      ->capture_default_str();
  phase->add_flag("--fixed-graph", phase_opt.fixed_graph,
                  "Reuse one graph per cell and vary only the initialization");
  phase->add_option("--step", phase_opt.cfg.step, "Step size")->capture_default_str();
  phase->add_option("--max-iters", phase_opt.cfg.max_iters, "Iteration cap")
      ->capture_default_str();
  phase->add_option("--grad-tol", phase_opt.cfg.grad_tol, "Gradient stop tolerance")
      ->capture_default_str();
  phase->add_option("--align-tol", phase_opt.cfg.align_tol,
                    "Success threshold on 1 - ||r||/n")
      ->capture_default_str();
  phase->add_option("--out", phase_opt.out, "Table output path (default: stdout)");
  phase->add_option("--curves-out", phase_opt.curves_out,
                    "Reference-curve output path (default: <out>.curves)");

  TwistedOptions twisted_opt;
  CLI::App* twisted =
      app.add_subcommand("twisted", "Twisted-state Hessian curve for ring graphs");
  twisted->add_option("--n", twisted_opt.n, "Ring size")->required();
  twisted->add_option("--k-min", twisted_opt.k_min, "Smallest k")
      ->capture_default_str();
  twisted->add_option("--k-max", twisted_opt.k_max,
                      "Largest k (default: (n-1)/2)");
  twisted->add_option("--out", twisted_opt.out, "Output path (default: stdout)");

  ClassifyOptions classify_opt;
  CLI::App* classify =
      app.add_subcommand("classify", "Classify a state as minimum or saddle");
  classify->add_option("--graph", classify_opt.graph_path, "Edge-list file")
      ->required();
  classify->add_option("--theta", classify_opt.theta_path, "Angles file")
      ->required();
  classify->add_option("--grad-tol", classify_opt.grad_tol,
                       "Criticality tolerance on ||grad||_inf")
      ->capture_default_str();
  classify->add_option("--eig-tol", classify_opt.eig_tol,
                       "Eigenvalue sign tolerance")
      ->capture_default_str();

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "Evaluate landscape certificates");
  check->add_option("--graph", check_opt.graph_path, "Edge-list file")->required();
  check->add_option("--theta", check_opt.theta_path,
                    "Angles file (enables the quadrant certificate)");
  check->add_option("--p", check_opt.p,
                    "Edge density for deviation/isometry checks");
  check->add_option("--gamma", check_opt.gamma, "Deviation-bound confidence level")
      ->capture_default_str();
  check->add_option("--delta", check_opt.delta,
                    "Isometry constant (enables the sampling probe)");
  check->add_option("--samples", check_opt.samples, "Probe sample count")
      ->capture_default_str();
  check->add_option("--seed", check_opt.seed, "Probe seed")->capture_default_str();
  check->add_option("--regime-n", check_opt.regime_n,
                    "Evaluate the benign-density regime for this n");
  check->add_option("--regime-gamma", check_opt.regime_gamma,
                    "Confidence level for --regime-n")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (descend_cmd->parsed()) return run_descend(descend_opt);
    if (phase->parsed()) return run_phase(phase_opt);
    if (twisted->parsed()) return run_twisted(twisted_opt);
    if (classify->parsed()) return run_classify(classify_opt);
    if (check->parsed()) return run_check(check_opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
