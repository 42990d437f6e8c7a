#include "synclab/certify.hpp"
#include "synclab/descent.hpp"
#include "synclab/errors.hpp"
#include "synclab/graph.hpp"
#include "synclab/harness.hpp"
#include "synclab/rng.hpp"
#include "synclab/spectral.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace synclab;

namespace {

// Python callers pass and receive plain angle arrays; the PhaseState
// wrapper stays an implementation detail of the C++ core.
PhaseState to_state(const Vector& theta) { return PhaseState(theta); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Energy landscape laboratory for network synchronization";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError",
                                         PyExc_ArithmeticError);

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init<Matrix>(), py::arg("weights"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::tuple<int, int, double>>& edges) {
            std::vector<Edge> converted;
            converted.reserve(edges.size());
            for (const auto& [i, j, w] : edges) converted.push_back({i, j, w});
            return WeightedGraph::from_edges(n, converted);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &WeightedGraph::size)
      .def_property_readonly(
          "weights", [](const WeightedGraph& g) { return g.weights(); })
      .def("edge_count", &WeightedGraph::edge_count)
      .def("total_weight", &WeightedGraph::total_weight)
      .def("degrees", &WeightedGraph::degrees)
      .def("__repr__", [](const WeightedGraph& g) {
        std::ostringstream os;
        os << "WeightedGraph(n=" << g.size() << ", edges=" << g.edge_count()
           << ")";
        return os.str();
      });

  py::class_<GraphMetrics>(m, "GraphMetrics")
      .def_readonly("min_degree", &GraphMetrics::min_degree)
      .def_readonly("degree_ratio", &GraphMetrics::degree_ratio)
      .def_readonly("connected", &GraphMetrics::connected)
      .def_readonly("laplacian_lambda2", &GraphMetrics::laplacian_lambda2);

  m.def("gen_path", &gen_path, py::arg("n"));
  m.def("gen_cycle", &gen_cycle, py::arg("n"));
  m.def("gen_wsg", &gen_wsg, py::arg("n"), py::arg("k"));
  m.def("gen_er", &gen_er, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("gen_complete", &gen_complete, py::arg("n"));
  m.def("gen_bipartite_wsg", &gen_bipartite_wsg, py::arg("n"), py::arg("k"));
  m.def("laplacian", &laplacian, py::arg("graph"));
  m.def("is_connected", &is_connected, py::arg("graph"));
  m.def("metrics", &metrics, py::arg("graph"));
  m.def(
      "save_edge_list",
      [](const WeightedGraph& g, const std::filesystem::path& path) {
        save_edge_list(g, path);
      },
      py::arg("graph"), py::arg("path"));
  m.def(
      "load_edge_list",
      [](const std::filesystem::path& path) { return load_edge_list(path); },
      py::arg("path"));

  py::class_<OrderParameter>(m, "OrderParameter")
      .def_readonly("magnitude", &OrderParameter::magnitude)
      .def_readonly("angle", &OrderParameter::angle)
      .def_readonly("degenerate", &OrderParameter::degenerate);

  m.def(
      "energy",
      [](const WeightedGraph& g, const Vector& theta) {
        return energy(g, to_state(theta));
      },
      py::arg("graph"), py::arg("theta"));
  m.def(
      "gradient",
      [](const WeightedGraph& g, const Vector& theta) {
        return gradient(g, to_state(theta));
      },
      py::arg("graph"), py::arg("theta"));
  m.def(
      "hessian",
      [](const WeightedGraph& g, const Vector& theta) {
        return hessian(g, to_state(theta));
      },
      py::arg("graph"), py::arg("theta"));
  m.def(
      "embedding",
      [](const Vector& theta) {
        const CircleEmbedding emb = embedding(to_state(theta));
        return std::make_pair(emb.x, emb.y);
      },
      py::arg("theta"), "Returns the (cos, sin) columns of the circle embedding");
  m.def(
      "order_parameter",
      [](const Vector& theta) { return order_parameter(to_state(theta)); },
      py::arg("theta"));

  py::enum_<StopReason>(m, "StopReason")
      .value("GradientTol", StopReason::GradientTol)
      .value("MaxIters", StopReason::MaxIters);
  py::enum_<Classification>(m, "Classification")
      .value("Global", Classification::Global)
      .value("NonGlobal", Classification::NonGlobal);

  py::class_<DescentConfig>(m, "DescentConfig")
      .def(py::init([](double step, int max_iters, double grad_tol,
                       double align_tol, int trace_every) {
             DescentConfig cfg{step, max_iters, grad_tol, align_tol,
                               trace_every};
             cfg.validate();
             return cfg;
           }),
           py::arg("step") = 0.005, py::arg("max_iters") = 1000,
           py::arg("grad_tol") = 1e-8, py::arg("align_tol") = 1e-3,
           py::arg("trace_every") = 0)
      .def_readwrite("step", &DescentConfig::step)
      .def_readwrite("max_iters", &DescentConfig::max_iters)
      .def_readwrite("grad_tol", &DescentConfig::grad_tol)
      .def_readwrite("align_tol", &DescentConfig::align_tol)
      .def_readwrite("trace_every", &DescentConfig::trace_every);

  py::class_<DescentOutcome>(m, "DescentOutcome")
      .def_property_readonly(
          "final_theta",
          [](const DescentOutcome& o) { return o.final_theta.theta; })
      .def_readonly("final_energy", &DescentOutcome::final_energy)
      .def_readonly("final_grad_norm", &DescentOutcome::final_grad_norm)
      .def_readonly("iterations", &DescentOutcome::iterations)
      .def_readonly("stopped_by", &DescentOutcome::stopped_by)
      .def_readonly("classification", &DescentOutcome::classification);

  py::class_<TraceRow>(m, "TraceRow")
      .def_readonly("iteration", &TraceRow::iteration)
      .def_readonly("energy", &TraceRow::energy)
      .def_readonly("grad_norm", &TraceRow::grad_norm)
      .def_readonly("order_magnitude", &TraceRow::order_magnitude);

  m.def(
      "random_init",
      [](int n, std::uint64_t seed) { return random_init(n, seed).theta; },
      py::arg("n"), py::arg("seed"));
  m.def(
      "descend",
      [](const WeightedGraph& g, const Vector& theta, const DescentConfig& cfg) {
        auto [outcome, trace] = descend(g, to_state(theta), cfg);
        return std::make_pair(std::move(outcome), std::move(trace.rows));
      },
      py::arg("graph"), py::arg("theta"), py::arg("config") = DescentConfig{});
  m.def("multi_restart", &multi_restart, py::arg("graph"), py::arg("trials"),
        py::arg("base_seed"), py::arg("config") = DescentConfig{},
        py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("classify_energy", &classify_energy, py::arg("graph"),
        py::arg("energy"), py::arg("epsilon"),
        "Secondary success rule: Global iff energy <= epsilon * sum a_ij");

  py::enum_<Verdict>(m, "Verdict")
      .value("NotCritical", Verdict::NotCritical)
      .value("LocalMinCandidate", Verdict::LocalMinCandidate)
      .value("Saddle", Verdict::Saddle);

  py::class_<CriticalPointReport>(m, "CriticalPointReport")
      .def_readonly("grad_inf_norm", &CriticalPointReport::grad_inf_norm)
      .def_readonly("hessian_eigs", &CriticalPointReport::hessian_eigs)
      .def_readonly("lambda2", &CriticalPointReport::lambda2)
      .def_readonly("verdict", &CriticalPointReport::verdict);

  m.def(
      "hessian_spectrum",
      [](const WeightedGraph& g, const Vector& theta) {
        return hessian_spectrum(g, to_state(theta));
      },
      py::arg("graph"), py::arg("theta"));
  m.def(
      "classify_critical",
      [](const WeightedGraph& g, const Vector& theta, double grad_tol,
         double eig_tol) {
        return classify_critical(g, to_state(theta), grad_tol, eig_tol);
      },
      py::arg("graph"), py::arg("theta"), py::arg("grad_tol") = 1e-7,
      py::arg("eig_tol") = 1e-8);
  m.def(
      "twisted_state", [](int n) { return twisted_state(n).theta; },
      py::arg("n"));
  m.def(
      "bipartite_twisted_state",
      [](int n) { return bipartite_twisted_state(n).theta; }, py::arg("n"));
  m.def("wsg_hessian_eigs", &wsg_hessian_eigs, py::arg("n"), py::arg("k"));
  m.def(
      "wsg_lambda2_curve",
      [](int n, int k_min, int k_max) {
        std::vector<std::tuple<int, double, double>> rows;
        for (const Lambda2Row& row : wsg_lambda2_curve(n, k_min, k_max)) {
          rows.emplace_back(row.k, row.mu, row.lambda2_min);
        }
        return rows;
      },
      py::arg("n"), py::arg("k_min"), py::arg("k_max"),
      "Rows of (k, mu, min eigenvalue above the null direction)");
  m.def("wsg_critical_k", &wsg_critical_k, py::arg("n"));
  m.def("bipartite_twisted_eigs", &bipartite_twisted_eigs, py::arg("n"),
        py::arg("k"));
  m.def(
      "path_critical_points",
      [](int n) {
        std::vector<std::tuple<std::uint32_t, double, Verdict>> out;
        for (const SignStateReport& r : path_critical_points(n)) {
          out.emplace_back(r.pattern, r.grad_inf_norm, r.verdict);
        }
        return out;
      },
      py::arg("n"), "Rows of (sign pattern bits, gradient norm, verdict)");

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("name", &Certificate::name)
      .def_readonly("holds", &Certificate::holds)
      .def_readonly("witness", &Certificate::witness)
      .def_readonly("notes", &Certificate::notes)
      .def("__repr__", [](const Certificate& c) {
        std::ostringstream os;
        os << "Certificate(" << c.name << ", "
           << (c.holds ? "PASS" : "FAIL") << ")";
        return os.str();
      });

  py::class_<ErRegime>(m, "ErRegime")
      .def_readonly("n", &ErRegime::n)
      .def_readonly("gamma", &ErRegime::gamma)
      .def_readonly("p", &ErRegime::p)
      .def_readonly("prob_bound", &ErRegime::prob_bound)
      .def_readonly("vacuous", &ErRegime::vacuous);

  m.def(
      "check_quadrant",
      [](const WeightedGraph& g, const Vector& theta) {
        return check_quadrant(g, to_state(theta));
      },
      py::arg("graph"), py::arg("theta"));
  m.def("check_min_degree", &check_min_degree, py::arg("graph"));
  m.def("er_regime", &er_regime, py::arg("n"), py::arg("gamma"));
  m.def("deviation_bound", &deviation_bound, py::arg("graph"), py::arg("p"),
        py::arg("gamma"));
  m.def(
      "rip_ratios",
      [](const WeightedGraph& g, double p, const Vector& theta) {
        return rip_ratios(g, p, to_state(theta));
      },
      py::arg("graph"), py::arg("p"), py::arg("theta"));
  m.def("rip_probe", &rip_probe, py::arg("graph"), py::arg("p"),
        py::arg("delta"), py::arg("samples"), py::arg("seed"));
  m.def(
      "first_order_residual",
      [](const WeightedGraph& g, const Vector& theta) {
        return first_order_residual(g, to_state(theta));
      },
      py::arg("graph"), py::arg("theta"));

  py::enum_<PRule>(m, "PRule")
      .value("Absolute", PRule::Absolute)
      .value("LogScaled", PRule::LogScaled);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("n_values", &GridSpec::n_values)
      .def_readwrite("p_rule", &GridSpec::p_rule)
      .def_readwrite("p_or_c", &GridSpec::p_or_c)
      .def_readwrite("trials", &GridSpec::trials)
      .def_readwrite("base_seed", &GridSpec::base_seed)
      .def_readwrite("config", &GridSpec::config)
      .def_readwrite("fixed_graph", &GridSpec::fixed_graph);

  py::class_<PhaseCell>(m, "PhaseCell")
      .def_readonly("n", &PhaseCell::n)
      .def_readonly("p", &PhaseCell::p)
      .def_readonly("trials", &PhaseCell::trials)
      .def_readonly("successes", &PhaseCell::successes)
      .def_readonly("fraction", &PhaseCell::fraction)
      .def_readonly("seed", &PhaseCell::seed)
      .def_readonly("p_clamped", &PhaseCell::p_clamped);

  m.def("cell_seed_for", &cell_seed_for, py::arg("base_seed"), py::arg("n"),
        py::arg("p"));
  m.def("run_cell", &run_cell, py::arg("n"), py::arg("p"), py::arg("trials"),
        py::arg("cell_seed"), py::arg("config") = DescentConfig{},
        py::arg("fixed_graph") = false);
  m.def("run_grid", &run_grid, py::arg("spec"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "write_phase_table",
      [](const std::vector<PhaseCell>& cells, const std::filesystem::path& path) {
        write_phase_table(cells, path);
      },
      py::arg("cells"), py::arg("path"));
  m.def(
      "reference_curves",
      [](const std::vector<int>& n_values) {
        std::vector<std::tuple<int, double, double>> rows;
        for (const ReferenceCurveRow& row : reference_curves(n_values)) {
          rows.emplace_back(row.n, row.log_n_over_n, row.two_log_n_over_n);
        }
        return rows;
      },
      py::arg("n_values"));
  m.def("derive_seed", &derive_seed, py::arg("base"), py::arg("index"));

  m.attr("__version__") = "0.1.0";
}
