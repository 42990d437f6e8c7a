#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace synclab {

// Dense row-major storage; the symmetric matrices here stay small enough
// (n <= 4000) that dense eigensolves dominate the cost anyway.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

struct Edge {
  int i = 0;
  int j = 0;
  double w = 1.0;
};

// Everything downstream runs dense eigensolves, so graphs are capped at a
// size where those stay tractable.
inline constexpr int kMaxVertices = 4000;

// Symmetric nonnegative weight matrix with zero diagonal. Immutable after
// construction, so shared reads from worker threads are safe.
class WeightedGraph {
 public:
  // Validates symmetry (exact), zero diagonal, nonnegativity, and the size
  // cap.
  explicit WeightedGraph(Matrix weights);

  static WeightedGraph from_edges(int n, const std::vector<Edge>& edges);

  int size() const { return n_; }
  const Matrix& weights() const { return weights_; }
  double weight(int i, int j) const { return weights_(i, j); }

  // Nonzero edges with i < j in row-major order.
  std::vector<Edge> edges() const;
  int edge_count() const;
  // Sum of weights over unordered pairs.
  double total_weight() const;
  // Weighted degree (row sum) per vertex.
  Vector degrees() const;

 private:
  int n_;
  Matrix weights_;
};

struct GraphMetrics {
  double min_degree = 0.0;
  double degree_ratio = 0.0;  // min_degree / (n - 1)
  bool connected = false;
  double laplacian_lambda2 = 0.0;
};

// Path on n >= 2 vertices: unit edges between consecutive indices.
WeightedGraph gen_path(int n);

// Cycle on n >= 3 vertices: the path plus the edge (0, n-1).
WeightedGraph gen_cycle(int n);

// Wiley-Strogatz-Girvan ring: vertex i adjacent to i+-1, ..., i+-k (mod n).
// Circulant 0/1 matrix; requires 1 <= k <= (n-1)/2.
WeightedGraph gen_wsg(int n, int k);

// Erdos-Renyi G(n, p): each unordered pair i < j (row-major order, one
// generator draw per pair) gets weight 1 with probability p. Deterministic
// in the seed.
WeightedGraph gen_er(int n, double p, std::uint64_t seed);

// Complete graph on n >= 2 vertices.
WeightedGraph gen_complete(int n);

// 2n-vertex bipartite version of the WSG ring: blocks [[0, A_k], [A_k, 0]].
WeightedGraph gen_bipartite_wsg(int n, int k);

// Graph Laplacian diag(A 1) - A.
Matrix laplacian(const WeightedGraph& g);

// Connectivity by breadth-first search over nonzero weights.
bool is_connected(const WeightedGraph& g);

GraphMetrics metrics(const WeightedGraph& g);

// Edge-list text format. First line "n <vertex count>", then one
// "i j w" line per edge (0-indexed, w defaults to 1 when omitted);
// '#' starts a comment. load(save(g)) == g exactly.
void save_edge_list(const WeightedGraph& g, std::ostream& out);
void save_edge_list(const WeightedGraph& g, const std::filesystem::path& path);
WeightedGraph load_edge_list(std::istream& in);
WeightedGraph load_edge_list(const std::filesystem::path& path);

}  // namespace synclab
