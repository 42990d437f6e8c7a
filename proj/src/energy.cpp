#include "synclab/energy.hpp"

#include "synclab/errors.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace synclab {

namespace {

void check_shape(const WeightedGraph& g, const PhaseState& s) {
  if (g.size() != s.size()) {
    throw ShapeError("phase vector has length " + std::to_string(s.size()) +
                     " but the graph has " + std::to_string(g.size()) +
                     " vertices");
  }
}

}  // namespace

Matrix CircleEmbedding::gram() const {
  return x * x.transpose() + y * y.transpose();
}

CircleEmbedding embedding(const PhaseState& s) {
  CircleEmbedding emb;
  emb.x = s.theta.array().cos();
  emb.y = s.theta.array().sin();
  return emb;
}

double energy(const WeightedGraph& g, const PhaseState& s) {
  check_shape(g, s);
  const Matrix& w = g.weights();
  const int n = g.size();
  // Each term 1 - cos(.) is nonnegative, so the sum is exactly zero at
  // aligned states and never dips below zero.
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double a = w(i, j);
      if (a != 0.0) {
        total += a * (1.0 - std::cos(s.theta(i) - s.theta(j)));
      }
    }
  }
  return total;
}

Vector gradient(const WeightedGraph& g, const PhaseState& s) {
  check_shape(g, s);
  const CircleEmbedding emb = embedding(s);
  // sum_j a_ij sin(theta_i - theta_j) = y_i (A x)_i - x_i (A y)_i.
  const Vector ax = g.weights() * emb.x;
  const Vector ay = g.weights() * emb.y;
  return emb.y.cwiseProduct(ax) - emb.x.cwiseProduct(ay);
}

Matrix hessian(const WeightedGraph& g, const PhaseState& s) {
  check_shape(g, s);
  const CircleEmbedding emb = embedding(s);
  // Signed weights a_ij cos(theta_i - theta_j); the zero diagonal of A
  // makes the row sums skip i = j.
  const Matrix signed_w = g.weights().cwiseProduct(emb.gram());
  Matrix h = -signed_w;
  h.diagonal() = signed_w.rowwise().sum();
  return h;
}

OrderParameter order_parameter(const PhaseState& s) {
  const CircleEmbedding emb = embedding(s);
  const double re = emb.x.sum();
  const double im = emb.y.sum();
  OrderParameter r;
  r.magnitude = std::hypot(re, im);
  r.degenerate = r.magnitude < 1e-9 * s.size();
  r.angle = r.degenerate ? 0.0 : std::atan2(im, re);
  return r;
}

void save_phase_state(const PhaseState& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  out << std::setprecision(17);
  for (int i = 0; i < s.size(); ++i) out << s.theta(i) << "\n";
  if (!out) throw ValidationError("write failed for " + path.string());
}

PhaseState load_phase_state(std::istream& in) {
  std::vector<double> values;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream fields(line);
    double v;
    if (fields >> v) {
      std::string extra;
      if (fields >> extra) throw ParseError("expected one angle per line", lineno);
      values.push_back(v);
    } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("expected a decimal angle", lineno);
    }
  }
  PhaseState s;
  s.theta.resize(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.theta(static_cast<Eigen::Index>(i)) = values[i];
  }
  return s;
}

PhaseState load_phase_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return load_phase_state(in);
}

}  // namespace synclab
