#include "synclab/graph.hpp"

#include "synclab/errors.hpp"
#include "synclab/rng.hpp"

#include <Eigen/Eigenvalues>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace synclab {

WeightedGraph::WeightedGraph(Matrix weights)
    : n_(static_cast<int>(weights.rows())), weights_(std::move(weights)) {
  if (weights_.rows() != weights_.cols() || n_ < 1) {
    throw ValidationError("weight matrix must be square and non-empty");
  }
  if (n_ > kMaxVertices) {
    throw ValidationError("dense storage supports at most " +
                          std::to_string(kMaxVertices) + " vertices");
  }
  for (int i = 0; i < n_; ++i) {
    if (weights_(i, i) != 0.0) {
      throw ValidationError("weight matrix must have zero diagonal");
    }
    for (int j = i + 1; j < n_; ++j) {
      if (weights_(i, j) != weights_(j, i)) {
        throw ValidationError("weight matrix must be symmetric");
      }
      if (weights_(i, j) < 0.0) {
        throw ValidationError("weights must be nonnegative");
      }
    }
  }
}

WeightedGraph WeightedGraph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw ValidationError("vertex count must be positive");
  Matrix w = Matrix::Zero(n, n);
  for (const Edge& e : edges) {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (e.i == e.j) throw ValidationError("self-loops are not allowed");
    if (e.w < 0.0) throw ValidationError("weights must be nonnegative");
    const double existing = w(e.i, e.j);
    if (existing != 0.0 && existing != e.w) {
      throw ValidationError("duplicate edge with conflicting weight");
    }
    w(e.i, e.j) = e.w;
    w(e.j, e.i) = e.w;
  }
  return WeightedGraph(std::move(w));
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (weights_(i, j) != 0.0) out.push_back({i, j, weights_(i, j)});
    }
  }
  return out;
}

int WeightedGraph::edge_count() const {
  int count = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (weights_(i, j) != 0.0) ++count;
    }
  }
  return count;
}

double WeightedGraph::total_weight() const {
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) total += weights_(i, j);
  }
  return total;
}

Vector WeightedGraph::degrees() const { return weights_.rowwise().sum(); }

WeightedGraph gen_path(int n) {
  if (n < 2) throw ValidationError("path graph needs n >= 2");
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    w(i, i + 1) = 1.0;
    w(i + 1, i) = 1.0;
  }
  return WeightedGraph(std::move(w));
}

WeightedGraph gen_cycle(int n) {
  if (n < 3) throw ValidationError("cycle graph needs n >= 3");
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    w(i, i + 1) = 1.0;
    w(i + 1, i) = 1.0;
  }
  w(0, n - 1) = 1.0;
  w(n - 1, 0) = 1.0;
  return WeightedGraph(std::move(w));
}

WeightedGraph gen_wsg(int n, int k) {
  if (n < 3) throw ValidationError("ring graph needs n >= 3");
  if (k < 1 || 2 * k > n - 1) {
    throw ValidationError("ring neighbor count must satisfy 1 <= k <= (n-1)/2");
  }
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k; ++d) {
      w(i, (i + d) % n) = 1.0;
      w(i, (i - d + n) % n) = 1.0;
    }
  }
  return WeightedGraph(std::move(w));
}

WeightedGraph gen_er(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ValidationError("vertex count must be positive");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("edge probability must lie in [0, 1]");
  }
  Matrix w = Matrix::Zero(n, n);
  SplitMix64 rng(seed);
  // One draw per unordered pair, in fixed i < j row-major order.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) {
        w(i, j) = 1.0;
        w(j, i) = 1.0;
      }
    }
  }
  return WeightedGraph(std::move(w));
}

WeightedGraph gen_complete(int n) {
  if (n < 2) throw ValidationError("complete graph needs n >= 2");
  Matrix w = Matrix::Ones(n, n);
  w.diagonal().setZero();
  return WeightedGraph(std::move(w));
}

WeightedGraph gen_bipartite_wsg(int n, int k) {
  const Matrix ring = gen_wsg(n, k).weights();
  Matrix w = Matrix::Zero(2 * n, 2 * n);
  w.block(0, n, n, n) = ring;
  w.block(n, 0, n, n) = ring;
  return WeightedGraph(std::move(w));
}

Matrix laplacian(const WeightedGraph& g) {
  Matrix l = -g.weights();
  l.diagonal() = g.degrees();
  return l;
}

bool is_connected(const WeightedGraph& g) {
  const int n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      if (!seen[j] && g.weight(v, j) != 0.0) {
        seen[j] = 1;
        ++visited;
        queue.push_back(j);
      }
    }
  }
  return visited == n;
}

GraphMetrics metrics(const WeightedGraph& g) {
  GraphMetrics m;
  const Vector deg = g.degrees();
  m.min_degree = deg.minCoeff();
  m.degree_ratio = g.size() > 1 ? m.min_degree / (g.size() - 1) : 0.0;
  m.connected = is_connected(g);
  if (g.size() == 1) {
    m.laplacian_lambda2 = 0.0;
    return m;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(laplacian(g),
                                           Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("Laplacian eigensolve did not converge");
  }
  m.laplacian_lambda2 = es.eigenvalues()(1);
  return m;
}

void save_edge_list(const WeightedGraph& g, std::ostream& out) {
  out << "n " << g.size() << "\n";
  out << std::setprecision(17);
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const double w = g.weight(i, j);
      if (w != 0.0) out << i << " " << j << " " << w << "\n";
    }
  }
}

void save_edge_list(const WeightedGraph& g,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  save_edge_list(g, out);
  if (!out) throw ValidationError("write failed for " + path.string());
}

namespace {

// Strips a trailing comment and surrounding whitespace.
std::string strip_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

WeightedGraph load_edge_list(std::istream& in) {
  std::string raw;
  int lineno = 0;
  int n = -1;
  Matrix w;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_line(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      fields >> tag >> n;
      if (fields.fail() || tag != "n" || n < 1) {
        throw ParseError("expected header \"n <vertex count>\"", lineno);
      }
      if (n > kMaxVertices) {
        throw ParseError("vertex count exceeds the dense-storage cap", lineno);
      }
      std::string extra;
      if (fields >> extra) throw ParseError("trailing tokens after header", lineno);
      w = Matrix::Zero(n, n);
      continue;
    }
    Edge e;
    fields >> e.i >> e.j;
    if (fields.fail()) throw ParseError("expected \"i j [w]\"", lineno);
    if (!(fields >> e.w)) {
      e.w = 1.0;
      fields.clear();  // so a malformed weight token is caught below
    }
    std::string extra;
    if (fields >> extra) throw ParseError("trailing tokens after edge", lineno);
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) {
      throw ParseError("vertex index out of range", lineno);
    }
    if (e.i == e.j) throw ParseError("self-loop", lineno);
    if (e.w < 0.0) throw ParseError("negative weight", lineno);
    if (w(e.i, e.j) != 0.0 && w(e.i, e.j) != e.w) {
      throw ParseError("duplicate edge with conflicting weight", lineno);
    }
    w(e.i, e.j) = e.w;
    w(e.j, e.i) = e.w;
  }
  if (n < 0) throw ParseError("missing header \"n <vertex count>\"", lineno + 1);
  return WeightedGraph(std::move(w));
}

WeightedGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return load_edge_list(in);
}

}  // namespace synclab
